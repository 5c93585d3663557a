#include "invseq/counting.hpp"

#include <atomic>
#include <stdexcept>

#include "invseq/closedform.hpp"
#include "invseq/seqcore.hpp"
#include "json.hpp"

namespace invseq {

namespace {

std::atomic<std::uint64_t> g_dp_additions{0};

inline BigInt counted_sum(const BigInt& a, const BigInt& b) {
  g_dp_additions.fetch_add(1, std::memory_order_relaxed);
  return a + b;
}

void check_cap(int n, int cap) {
  if (cap < 1 || cap > kMaxBruteCap)
    throw std::invalid_argument("brute-force cap must be in 1.." +
                                std::to_string(kMaxBruteCap));
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the brute-force cap " +
                                std::to_string(cap));
}

}  // namespace

std::uint64_t dp_addition_count() { return g_dp_additions.load(); }
void reset_dp_addition_count() { g_dp_additions.store(0); }

StatTriangle::StatTriangle(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("StatTriangle: n must be >= 1");
  cells_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, BigInt(0));
}

const BigInt& StatTriangle::at(int k, int l) const {
  static const BigInt zero(0);
  if (k < 0 || l < k || l >= n_) return zero;
  return cells_[static_cast<std::size_t>(l) * (l + 1) / 2 + k];
}

BigInt& StatTriangle::cell(int k, int l) {
  if (k < 0 || l < k || l >= n_)
    throw std::out_of_range("StatTriangle::cell: (k,l) outside the triangle");
  return cells_[static_cast<std::size_t>(l) * (l + 1) / 2 + k];
}

BigInt StatTriangle::total() const {
  BigInt sum = 0;
  for (const BigInt& c : cells_) sum += c;
  return sum;
}

BigInt StatTriangle::last_column_sum() const {
  BigInt sum = 0;
  for (int k = 0; k < n_; ++k) sum += at(k, n_ - 1);
  return sum;
}

namespace {

// Advances the table from length n-1 to length n, n >= 2.
StatTriangle next_row(const StatTriangle& prev) {
  const int n = prev.n() + 1;
  StatTriangle cur(n);

  // colsuf[l][k] = sum_{k'=k}^{l} f_{n-1}(k', l)
  std::vector<std::vector<BigInt>> colsuf(n - 1);
  for (int l = 0; l <= n - 2; ++l) {
    colsuf[l].assign(l + 2, BigInt(0));
    for (int k = l; k >= 0; --k)
      colsuf[l][k] = counted_sum(colsuf[l][k + 1], prev.at(k, l));
  }
  // rowsuf[k][l] = sum_{l'=l}^{n-2} f_{n-1}(k, l')
  std::vector<std::vector<BigInt>> rowsuf(n - 1);
  for (int k = 0; k <= n - 2; ++k) {
    rowsuf[k].assign(n, BigInt(0));
    for (int l = n - 2; l >= k; --l)
      rowsuf[k][l] = counted_sum(rowsuf[k][l + 1], prev.at(k, l));
  }

  // (a) the all-distinct sequence.
  cur.cell(n - 1, n - 1) = 1;
  // (b) f_n(n-2, n-1) = 0: already zero-filled.
  // (c) f_n(k, n-1) = sum_{k'=k}^{n-2} f_{n-1}(k', n-2) for k <= n-3.
  for (int k = 0; k <= n - 3; ++k) cur.cell(k, n - 1) = colsuf[n - 2][k];
  // (d) f_n(l, l) = sum_{l'=l}^{n-2} sum_{k'=l}^{l'} f_{n-1}(k', l').
  for (int l = 0; l <= n - 2; ++l) {
    BigInt diag = 0;
    for (int lp = l; lp <= n - 2; ++lp) diag = counted_sum(diag, colsuf[lp][l]);
    cur.cell(l, l) = diag;
  }
  // (e) f_n(k, l) = sum_{k'=k}^{l} f_{n-1}(k', l)
  //               + sum_{l'=l}^{n-2} f_{n-1}(k, l') for k < l <= n-2.
  for (int l = 1; l <= n - 2; ++l)
    for (int k = 0; k < l; ++k)
      cur.cell(k, l) = counted_sum(colsuf[l][k], rowsuf[k][l]);

  return cur;
}

}  // namespace

void stream_triangles(int max_n,
                      const std::function<void(const StatTriangle&)>& fn) {
  if (max_n < 1) throw std::invalid_argument("stream_triangles: max_n >= 1");
  StatTriangle row(1);
  row.cell(0, 0) = 1;  // I_1 = { 0 }, srpt = last = 0
  fn(row);
  for (int n = 2; n <= max_n; ++n) {
    row = next_row(row);
    fn(row);
  }
}

StatTriangle stat_triangle(int n) {
  if (n < 1) throw std::invalid_argument("stat_triangle: n must be >= 1");
  StatTriangle out(1);
  stream_triangles(n, [&](const StatTriangle& t) {
    if (t.n() == n) out = t;
  });
  return out;
}

StatTriangle brute_stat_triangle(int n, int cap) {
  if (n < 1) throw std::invalid_argument("brute_stat_triangle: n must be >= 1");
  check_cap(n, cap);
  StatTriangle t(n);
  enumerate(n, {pattern_0012()}, [&](const Word& e) {
    StatProfile prof = stat_profile(e);
    t.cell(prof.srpt, prof.last) += 1;
  });
  return t;
}

BigInt count_avoiders(int n, const std::vector<Pattern>& patterns, int cap) {
  if (n < 1) throw std::invalid_argument("count_avoiders: n must be >= 1");
  check_cap(n, cap);
  BigInt count = 0;
  enumerate(n, patterns, [&](const Word&) { count += 1; });
  return count;
}

BigInt count_avoid_0012(int n, Method method, int cap) {
  if (n < 1) throw std::invalid_argument("count_avoid_0012: n must be >= 1");
  switch (method) {
    case Method::Brute:
      return count_avoiders(n, {pattern_0012()}, cap);
    case Method::Dp:
      return stat_triangle(n).total();
    case Method::Formula:
      return a279561(n);
  }
  throw std::logic_error("count_avoid_0012: unknown method");
}

BigInt count_last_max(int n, Method method, int cap) {
  if (n < 1) throw std::invalid_argument("count_last_max: n must be >= 1");
  switch (method) {
    case Method::Brute: {
      check_cap(n, cap);
      BigInt count = 0;
      enumerate(n, {pattern_0012()}, [&](const Word& e) {
        if (e.back() == n - 1) count += 1;
      });
      return count;
    }
    case Method::Dp:
      return stat_triangle(n).last_column_sum();
    case Method::Formula:
      return pow2_last(n);
  }
  throw std::logic_error("count_last_max: unknown method");
}

std::string triangle_to_csv(const StatTriangle& t) {
  std::string out = "n,k,l,count";
  for (int l = 0; l < t.n(); ++l)
    for (int k = 0; k <= l; ++k)
      out += "\n" + std::to_string(t.n()) + "," + std::to_string(k) + "," +
             std::to_string(l) + "," + t.at(k, l).str();
  return out;
}

std::string triangle_to_json(const StatTriangle& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (int l = 0; l < t.n(); ++l)
    for (int k = 0; k <= l; ++k)
      arr.push_back({{"k", k}, {"l", l}, {"count", t.at(k, l).str()}});
  return arr.dump();
}

std::string report_to_json(const CountReport& r) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [n, v] : r.values)
    values.push_back({{"n", n}, {"count", v.str()}});
  nlohmann::json obj{{"family", r.family}, {"method", r.method},
                     {"values", values}};
  return obj.dump();
}

CountReport report_from_json(const std::string& text) {
  nlohmann::json obj = nlohmann::json::parse(text);
  CountReport r;
  r.family = obj.at("family").get<std::string>();
  r.method = obj.at("method").get<std::string>();
  for (const auto& item : obj.at("values"))
    r.values.emplace_back(item.at("n").get<int>(),
                          BigInt(item.at("count").get<std::string>()));
  return r;
}

}  // namespace invseq
