#include "invseq/closedform.hpp"

#include <stdexcept>
#include <vector>

namespace invseq {

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every intermediate division is exact.
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt a279561(int n) {
  if (n < 1) throw std::invalid_argument("a279561: n must be >= 1");
  BigInt total = 1;
  for (int i = 1; i <= n - 1; ++i) total += binomial(2 * i, i - 1);
  return total;
}

BigInt pow2_last(int n) {
  if (n < 1) throw std::invalid_argument("pow2_last: n must be >= 1");
  if (n == 1) return 1;
  return BigInt(1) << (n - 2);
}

BigInt bell(int n) {
  if (n < 1) throw std::invalid_argument("bell: n must be >= 1");
  // Bell triangle; bell(1) = 1, bell(2) = 2, ... matches |I_n(011)|
  // (offset frozen after calibration against brute-force counts).
  std::vector<BigInt> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

BigInt schroder(int n) {
  if (n < 1) throw std::invalid_argument("schroder: n must be >= 1");
  // Large Schroder numbers 1, 2, 6, 22, 90, ... via the three-term
  // recurrence (m+2) s_{m+1} = 3(2m+1) s_m - (m-1) s_{m-1}; the division
  // is exact. schroder(n) is the (n-1)-st term (offset frozen after
  // calibration against brute-force counts).
  BigInt prev = 1, curr = 2;
  if (n == 1) return prev;
  for (int m = 1; m < n - 1; ++m) {
    BigInt next = (3 * (2 * m + 1) * curr - (m - 1) * prev) / (m + 2);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace invseq
