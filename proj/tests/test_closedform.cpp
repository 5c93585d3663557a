#include <stdexcept>
#include "doctest.h"
#include "invseq/closedform.hpp"
#include "invseq/counting.hpp"
#include "invseq/seqcore.hpp"

using namespace invseq;

TEST_CASE("binomial") {
  CHECK(binomial(2, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, -1) == 0);
  CHECK(binomial(2, 3) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  // Terms of the 0012 counting sum.
  CHECK(binomial(2, 0) == 1);
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(6, 2) == 15);
  // Pascal recurrence on a band.
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("a279561") {
  CHECK(a279561(1) == 1);
  CHECK(a279561(2) == 2);
  CHECK(a279561(3) == 6);
  CHECK(a279561(4) == 21);
  CHECK(a279561(5) == 77);  // 1 + 1 + 4 + 15 + 56
  CHECK(a279561(6) == 287);
  CHECK_THROWS_AS(a279561(0), std::invalid_argument);
  for (int n = 2; n <= 60; ++n)
    CHECK(a279561(n) - a279561(n - 1) == binomial(2 * (n - 1), n - 2));
}

TEST_CASE("pow2_last") {
  CHECK(pow2_last(1) == 1);
  CHECK(pow2_last(2) == 1);
  CHECK(pow2_last(12) == 1024);
  CHECK_THROWS_AS(pow2_last(0), std::invalid_argument);
}

TEST_CASE("bell numbers under the I_n(011) indexing") {
  CHECK(bell(1) == 1);
  CHECK(bell(2) == 2);
  CHECK(bell(3) == 5);
  CHECK(bell(4) == 15);
  CHECK(bell(5) == 52);
  CHECK(bell(6) == 203);
  // Offset calibration against the brute-force counts.
  Pattern p011({0, 1, 1});
  for (int n = 1; n <= 4; ++n) CHECK(bell(n) == count_avoiders(n, {p011}));
  // Standard recurrence at this offset, with the k = 0 term (the empty
  // partition) contributing 1: bell(n+1) = 1 + sum_{k=1}^{n} C(n,k) bell(k).
  for (int n = 1; n <= 20; ++n) {
    BigInt sum = 1;
    for (int k = 1; k <= n; ++k) sum += binomial(n, k) * bell(k);
    CHECK(bell(n + 1) == sum);
  }
}

TEST_CASE("large Schroder numbers under the I_n(021) indexing") {
  CHECK(schroder(1) == 1);
  CHECK(schroder(2) == 2);
  CHECK(schroder(3) == 6);
  CHECK(schroder(4) == 22);
  CHECK(schroder(5) == 90);
  CHECK(schroder(6) == 394);
  Pattern p021({0, 2, 1});
  for (int n = 1; n <= 4; ++n) CHECK(schroder(n) == count_avoiders(n, {p021}));
  // Three-term recurrence at this offset, m = n-1.
  for (int m = 2; m <= 30; ++m)
    CHECK((m + 2) * schroder(m + 2) ==
          3 * (2 * m + 1) * schroder(m + 1) - (m - 1) * schroder(m));
}

TEST_CASE("formula equals brute force for small n") {
  Pattern p011({0, 1, 1}), p021({0, 2, 1});
  for (int n = 1; n <= 7; ++n) {
    CHECK(a279561(n) == count_avoiders(n, {pattern_0012()}));
    CHECK(bell(n) == count_avoiders(n, {p011}));
    CHECK(schroder(n) == count_avoiders(n, {p021}));
  }
}
