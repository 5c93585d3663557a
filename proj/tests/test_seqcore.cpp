#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "invseq/seqcore.hpp"

using namespace invseq;

TEST_CASE("enumerate yields I_n in lexicographic order") {
  auto all3 = enumerate_collect(3, {});
  std::vector<Word> expected{{0, 0, 0}, {0, 0, 1}, {0, 0, 2},
                             {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  CHECK(all3 == expected);

  // A length-3 word cannot contain a length-4 pattern.
  CHECK(enumerate_collect(3, {pattern_0012()}) == expected);

  CHECK(enumerate_collect(0, {}).size() == 1);
  CHECK(enumerate_collect(0, {})[0] == Word{});
}

TEST_CASE("enumeration cardinality is n!") {
  long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    CHECK(enumerate_collect(n, {}).size() == static_cast<std::size_t>(factorial));
  }
}

TEST_CASE("enumerate(4, {0012}) has 21 members") {
  CHECK(enumerate_collect(4, {pattern_0012()}).size() == 21);
}

TEST_CASE("partitioned enumeration covers the whole set") {
  std::vector<Word> whole = enumerate_collect(5, {pattern_0012()});
  std::vector<Word> merged;
  for (int v = 0; v <= 1; ++v)
    enumerate_with_prefix(5, {pattern_0012()}, {0, v},
                          [&](const Word& e) { merged.push_back(e); });
  std::sort(merged.begin(), merged.end());
  CHECK(merged == whole);
}

TEST_CASE("stat_profile") {
  StatProfile p = stat_profile({0, 1, 2, 3});
  CHECK(p.srpt == 3);  // all-distinct convention
  CHECK(p.last == 3);
  CHECK(p.repeated.empty());

  p = stat_profile({0, 0, 0});
  CHECK(p.srpt == 0);
  CHECK(p.last == 0);

  p = stat_profile({0, 1, 1, 3});
  CHECK(p.srpt == 1);
  CHECK(p.last == 3);
  CHECK(p.repeated == std::set<int>{1});

  CHECK_THROWS_AS(stat_profile({}), std::invalid_argument);
}

TEST_CASE("drop_last") {
  CHECK(drop_last({0, 0, 2, 1}) == Word{0, 0, 2});
  CHECK(drop_last({0, 1}) == Word{0});
  CHECK_THROWS_AS(drop_last({0}), std::invalid_argument);
}

TEST_CASE("shift_reduce examples and contract") {
  CHECK(shift_reduce({0, 1, 1, 1}, 1) == Word{0, 0, 0});
  CHECK(shift_reduce({0, 0}, 0) == Word{0, 0});
  CHECK(shift_reduce({0, 1, 2, 2}, 2) == Word{0, 0});
  // srpt(0,1) = 1 = n-1, not k = 0.
  CHECK_THROWS_AS(shift_reduce({0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(shift_reduce({0, 0}, 1), std::invalid_argument);
}

// Lemma suites at small n; the acceptance run extends these to n = 9.
TEST_CASE("lemma properties over I_n(0012), n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    enumerate(n, {pattern_0012()}, [&](const Word& e) {
      StatProfile p = stat_profile(e);
      // Corollary: 0 <= srpt <= last <= n-1.
      CHECK(0 <= p.srpt);
      CHECK(p.srpt <= p.last);
      CHECK(p.last <= n - 1);
      // e_i = i-1 for i <= srpt+1.
      for (int i = 0; i <= p.srpt && i < n; ++i) CHECK(e[i] == i);
      // Dichotomy for gamma(e).
      Word identity(n);
      for (int i = 0; i < n; ++i) identity[i] = i;
      if (n >= 2 && e != identity) {
        StatProfile g = stat_profile(drop_last(e));
        if (p.last > g.srpt) CHECK(p.srpt == g.srpt);
        else CHECK(p.srpt == p.last);
      }
      // Shift map lands in I_{n-k}(0012) with srpt = last = 0.
      if (n >= 2 && p.srpt == p.last && p.srpt <= n - 2) {
        Word shifted = shift_reduce(e, p.srpt);
        CHECK(is_inversion_sequence(shifted));
        CHECK(avoids(shifted, pattern_0012()));
        StatProfile sp = stat_profile(shifted);
        CHECK(sp.srpt == 0);
        CHECK(sp.last == 0);
      }
    });
  }
}

TEST_CASE("gamma keeps avoidance") {
  for (int n = 2; n <= 6; ++n)
    enumerate(n, {pattern_0012()}, [&](const Word& e) {
      Word g = drop_last(e);
      CHECK(is_inversion_sequence(g));
      CHECK(avoids(g, pattern_0012()));
    });
}
