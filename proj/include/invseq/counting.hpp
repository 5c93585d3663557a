#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "invseq/bigint.hpp"
#include "invseq/word.hpp"

namespace invseq {

inline constexpr int kDefaultBruteCap = 9;
inline constexpr int kMaxBruteCap = 11;

// The f_n(k, l) statistic table for one n: the number of 0012-avoiding
// inversion sequences of length n with srpt = k and last = l, stored
// densely on the lower triangle 0 <= k <= l <= n-1.
class StatTriangle {
 public:
  explicit StatTriangle(int n);

  int n() const { return n_; }

  // Zero outside the triangle.
  const BigInt& at(int k, int l) const;
  BigInt& cell(int k, int l);

  BigInt total() const;
  // sum_k f_n(k, n-1), the count of sequences with last = n-1.
  BigInt last_column_sum() const;

  bool operator==(const StatTriangle& other) const = default;

 private:
  int n_;
  std::vector<BigInt> cells_;  // index l*(l+1)/2 + k
};

// Fills the triangle bottom-up from n' = 1 via the five recurrence cases,
// using suffix cumulative arrays of the previous row (O(n^2) per row).
StatTriangle stat_triangle(int n);

// Streams stat_triangle(1), ..., stat_triangle(max_n); only one previous
// row is retained internally.
void stream_triangles(int max_n,
                      const std::function<void(const StatTriangle&)>& fn);

// Oracle: tallies the triangle directly from the brute-force enumeration.
StatTriangle brute_stat_triangle(int n, int cap = kDefaultBruteCap);

enum class Method { Brute, Dp, Formula };

BigInt count_avoid_0012(int n, Method method, int cap = kDefaultBruteCap);
BigInt count_last_max(int n, Method method, int cap = kDefaultBruteCap);
BigInt count_avoiders(int n, const std::vector<Pattern>& patterns,
                      int cap = kDefaultBruteCap);

// CSV with header "n,k,l,count", rows ordered by l then k; JSON array of
// {"k":..,"l":..,"count":".."} with counts as decimal strings.
std::string triangle_to_csv(const StatTriangle& t);
std::string triangle_to_json(const StatTriangle& t);

struct CountReport {
  std::string family;
  std::string method;
  std::vector<std::pair<int, BigInt>> values;  // strictly increasing in n
};

std::string report_to_json(const CountReport& r);
CountReport report_from_json(const std::string& text);

// BigInt additions performed by the DP since the last reset; the DP for
// all n <= N costs O(N^3) additions in total.
std::uint64_t dp_addition_count();
void reset_dp_addition_count();

}  // namespace invseq
