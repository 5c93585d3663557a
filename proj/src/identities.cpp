#include "invseq/identities.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "invseq/counting.hpp"

namespace invseq {

namespace {

using Rows = std::vector<StatTriangle>;

// DP rows n = 1..N, shared across assemblies and grown on demand.
std::shared_ptr<const Rows> cached_rows(int n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const Rows> cache = std::make_shared<Rows>();
  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<int>(cache->size()) < n_max) {
    auto grown = std::make_shared<Rows>();
    grown->reserve(n_max);
    stream_triangles(n_max,
                     [&](const StatTriangle& t) { grown->push_back(t); });
    cache = grown;
  }
  return cache;
}

Rational eval_last_column(const StatTriangle& t, const Rational& x) {
  const int n = t.n();
  Rational acc = 0;
  for (int k = n - 1; k >= 0; --k) acc = acc * x + Rational(t.at(k, n - 1));
  return acc;
}

Rational eval_diagonal(const StatTriangle& t, const Rational& x) {
  const int n = t.n();
  Rational acc = 0;
  for (int l = n - 2; l >= 0; --l) acc = acc * x + Rational(t.at(l, l));
  return acc;
}

Rational eval_full(const StatTriangle& t, const Rational& x,
                   const Rational& y) {
  const int n = t.n();
  Rational acc = 0;
  for (int l = n - 1; l >= 0; --l) {
    Rational inner = 0;
    for (int k = l; k >= 0; --k) inner = inner * x + Rational(t.at(k, l));
    acc = acc * y + inner;
  }
  return acc;
}

// 1 - q - 2yq + 2yq^2 + y^2 q^2 as a polynomial in q.
TruncatedSeries w_poly(const Rational& y, int order) {
  return series_poly(order, {1, -1 - 2 * y, 2 * y + y * y});
}

}  // namespace

TruncatedSeries assemble_from_dp(GfKind which, const Rational& x,
                                 const Rational& y, int order) {
  TruncatedSeries out(order);
  if (order == 0) return out;
  auto rows = cached_rows(order);
  for (int n = 1; n <= order; ++n) {
    const StatTriangle& t = (*rows)[n - 1];
    switch (which) {
      case GfKind::L:
        out.set_coeff(n, eval_last_column(t, x));
        break;
      case GfKind::D:
        out.set_coeff(n, eval_diagonal(t, x));
        break;
      case GfKind::F:
        out.set_coeff(n, eval_full(t, x, y));
        break;
    }
  }
  return out;
}

TruncatedSeries L_closed(const Rational& x, int order) {
  TruncatedSeries numer = series_poly(order, {0, 1, -2, 1});  // q(1-q)^2
  TruncatedSeries denom =
      series_poly(order, {1, -2}) * series_poly(order, {1, -x});
  return numer * denom.recip();
}

TruncatedSeries F11_closed(int order) {
  TruncatedSeries s = sqrt_one_minus_4q(order);
  TruncatedSeries numer =
      series_poly(order, {1, -4}) + series_poly(order, {1, -2}) * s;
  TruncatedSeries denom =
      series_poly(order, {2, -2}) * series_poly(order, {1, -4});
  return numer * denom.recip() - series_poly(order, {1});
}

TruncatedSeries D_closed(const Rational& x, int order) {
  return (series_poly(order, {1, -x}).recip() * F11_closed(order)).shift_up(1);
}

namespace {

TruncatedSeries F1y_closed(const Rational& y, int order) {
  if (y == 1) throw std::domain_error("F(1,y;q) closed form is singular at y = 1");
  TruncatedSeries f11 = F11_closed(order);
  TruncatedSeries kernel = series_poly(order, {1 - y, y * y});  // 1-y+y^2 q
  TruncatedSeries term1 = (kernel.recip() * f11).shift_up(1);
  TruncatedSeries term2 =
      (w_poly(y, order) * (1 - y) *
       (series_poly(order, {1, -1}) * series_poly(order, {1, -2 * y}) * kernel)
           .recip())
          .shift_up(1);
  return term1 + term2;
}

}  // namespace

TruncatedSeries F_closed(const Rational& x, const Rational& y, int order) {
  if (x == 1 && y == 1) return F11_closed(order);
  if (y == 1)
    return series_poly(order, {1, -1}) * series_poly(order, {1, -x}).recip() *
           F11_closed(order);
  if (x == 1) return F1y_closed(y, order);
  // Solve the denominator-cleared functional equation for F(x,y;q); the
  // leading factor has constant term (1-x)(1-y) != 0 here.
  TruncatedSeries f11 = F11_closed(order);
  TruncatedSeries f1y = F1y_closed(y, order);
  TruncatedSeries lin_xy = series_poly(order, {1, -x * y});  // 1-xyq
  TruncatedSeries lin_2y = series_poly(order, {1, -2 * y});  // 1-2yq
  TruncatedSeries head = series_poly(
      order, {(1 - x) * (1 - y), x * (1 - y) + y * (1 - x)});
  TruncatedSeries rhs =
      (lin_xy * lin_2y * f1y * (1 - y)).shift_up(1) +
      (series_poly(order, {1, -1}) * lin_2y * f11 * (1 - x)).shift_up(1) +
      (w_poly(y, order) * ((1 - x) * (1 - y))).shift_up(1);
  return rhs * (head * lin_xy * lin_2y).recip();
}

std::optional<IdentityId> parse_identity(const std::string& name) {
  if (name == "G-gf") return IdentityId::GGf;
  if (name == "func-G") return IdentityId::FuncG;
  if (name == "D-1") return IdentityId::D1;
  if (name == "D-2") return IdentityId::D2;
  if (name == "F-x1") return IdentityId::Fx1;
  if (name == "F-xy") return IdentityId::Fxy;
  if (name == "F-1y") return IdentityId::F1y;
  return std::nullopt;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::GGf: return "G-gf";
    case IdentityId::FuncG: return "func-G";
    case IdentityId::D1: return "D-1";
    case IdentityId::D2: return "D-2";
    case IdentityId::Fx1: return "F-x1";
    case IdentityId::Fxy: return "F-xy";
    case IdentityId::F1y: return "F-1y";
  }
  throw std::logic_error("identity_name: unknown identity");
}

int identity_arity(IdentityId id) {
  return id == IdentityId::Fxy ? 2 : 1;
}

namespace {

// Residual of the denominator-cleared F(x,y;q) functional equation given
// pre-assembled series.
TruncatedSeries fxy_residual(const Rational& x, const Rational& y,
                             const TruncatedSeries& fxy,
                             const TruncatedSeries& f1y,
                             const TruncatedSeries& f11) {
  const int order = fxy.order();
  TruncatedSeries lin_xy = series_poly(order, {1, -x * y});
  TruncatedSeries lin_2y = series_poly(order, {1, -2 * y});
  TruncatedSeries head = series_poly(
      order, {(1 - x) * (1 - y), x * (1 - y) + y * (1 - x)});
  TruncatedSeries lhs = head * lin_xy * lin_2y * fxy;
  TruncatedSeries rhs =
      (lin_xy * lin_2y * f1y * (1 - y)).shift_up(1) +
      (series_poly(order, {1, -1}) * lin_2y * f11 * (1 - x)).shift_up(1) +
      (w_poly(y, order) * ((1 - x) * (1 - y))).shift_up(1);
  return lhs - rhs;
}

TruncatedSeries f1y_residual(const Rational& y, const TruncatedSeries& f1y,
                             const TruncatedSeries& f11) {
  const int order = f1y.order();
  // (1-q)(1-2yq)(1-y+y^2 q) F(1,y) = q(1-q)(1-2yq) F(1,1) + q(1-y) W
  TruncatedSeries lhs = series_poly(order, {1, -1}) *
                        series_poly(order, {1, -2 * y}) *
                        series_poly(order, {1 - y, y * y}) * f1y;
  TruncatedSeries rhs =
      (series_poly(order, {1, -1}) * series_poly(order, {1, -2 * y}) * f11)
          .shift_up(1) +
      (w_poly(y, order) * (1 - y)).shift_up(1);
  return lhs - rhs;
}

}  // namespace

TruncatedSeries check_identity(IdentityId id, const Rational& x,
                               const Rational& y, int order) {
  switch (id) {
    case IdentityId::GGf:
      return assemble_from_dp(GfKind::L, x, 0, order) - L_closed(x, order);
    case IdentityId::FuncG: {
      // (1-xq)(1-x+xq) L(x;q) = q(1-xq) L(1;q) + q(1-q)(1-x)
      TruncatedSeries lx = assemble_from_dp(GfKind::L, x, 0, order);
      TruncatedSeries l1 = assemble_from_dp(GfKind::L, 1, 0, order);
      TruncatedSeries lhs = series_poly(order, {1, -x}) *
                            series_poly(order, {1 - x, x}) * lx;
      TruncatedSeries rhs =
          (series_poly(order, {1, -x}) * l1).shift_up(1) +
          series_poly(order, {0, 1 - x, -(1 - x)});
      return lhs - rhs;
    }
    case IdentityId::D1: {
      // (1-xq) D(x;q) = D(0;q)
      TruncatedSeries dx = assemble_from_dp(GfKind::D, x, 0, order);
      TruncatedSeries d0 = assemble_from_dp(GfKind::D, 0, 0, order);
      return series_poly(order, {1, -x}) * dx - d0;
    }
    case IdentityId::D2: {
      // (1-xq) D(x;q) = q F(1,1;q)
      TruncatedSeries dx = assemble_from_dp(GfKind::D, x, 0, order);
      TruncatedSeries f11 = assemble_from_dp(GfKind::F, 1, 1, order);
      return series_poly(order, {1, -x}) * dx - f11.shift_up(1);
    }
    case IdentityId::Fx1: {
      // (1-xq) F(x,1;q) = (1-q) F(1,1;q)
      TruncatedSeries fx1 = assemble_from_dp(GfKind::F, x, 1, order);
      TruncatedSeries f11 = assemble_from_dp(GfKind::F, 1, 1, order);
      return series_poly(order, {1, -x}) * fx1 -
             series_poly(order, {1, -1}) * f11;
    }
    case IdentityId::Fxy: {
      if (x == 1 || y == 1)
        throw std::domain_error("F-xy is singular at x = 1 or y = 1");
      return fxy_residual(x, y, assemble_from_dp(GfKind::F, x, y, order),
                          assemble_from_dp(GfKind::F, 1, y, order),
                          assemble_from_dp(GfKind::F, 1, 1, order));
    }
    case IdentityId::F1y: {
      if (y == 1) throw std::domain_error("F-1y is singular at y = 1");
      return f1y_residual(y, assemble_from_dp(GfKind::F, 1, y, order),
                          assemble_from_dp(GfKind::F, 1, 1, order));
    }
  }
  throw std::logic_error("check_identity: unknown identity");
}

std::vector<Rational> sample_schedule(int count) {
  if (count < 0) throw std::invalid_argument("sample_schedule: count >= 0");
  static const std::vector<Rational> seed{
      Rational(0),      Rational(1, 2), Rational(-1), Rational(2, 3),
      Rational(3),      Rational(5, 7), Rational(-2, 5), Rational(7, 4)};
  std::vector<Rational> out;
  out.reserve(count);
  for (const Rational& r : seed) {
    if (static_cast<int>(out.size()) == count) break;
    out.push_back(r);
  }
  // Integer extension keeps numerators small; 1 and 3 are skipped (3 is
  // already in the seed, 1 is singular for several identities).
  for (int v = 4; static_cast<int>(out.size()) < count; ++v)
    out.push_back(Rational(v));
  return out;
}

IdentityResult check_identity_schedule(IdentityId id, int samples, int order) {
  std::vector<Rational> points = sample_schedule(samples);
  IdentityResult result;
  auto record = [&](const Rational& x, const Rational& y,
                    const TruncatedSeries& residual) {
    if (residual.is_zero()) return true;
    int i = residual.first_nonzero();
    result.pass = false;
    result.failure = IdentityFailure{x, y, i, residual.coeff(i)};
    return false;
  };

  if (id != IdentityId::Fxy) {
    const bool over_y = (id == IdentityId::F1y);
    for (const Rational& p : points) {
      Rational x = over_y ? Rational(1) : p;
      Rational y = over_y ? p : Rational(0);
      if (!record(x, y, check_identity(id, x, y, order))) return result;
    }
    return result;
  }

  // Two-parameter grid. F(x,y;q) is re-evaluated from per-x partial sums
  // so each grid point costs O(order) triangle-independent work.
  auto rows = cached_rows(order);
  TruncatedSeries f11 = assemble_from_dp(GfKind::F, 1, 1, order);
  std::vector<TruncatedSeries> f1y_by_point;
  f1y_by_point.reserve(points.size());
  for (const Rational& y : points)
    f1y_by_point.push_back(assemble_from_dp(GfKind::F, 1, y, order));

  for (const Rational& x : points) {
    // xpart[n-1][l] = sum_{k<=l} f_n(k,l) x^k
    std::vector<std::vector<Rational>> xpart(order);
    for (int n = 1; n <= order; ++n) {
      const StatTriangle& t = (*rows)[n - 1];
      xpart[n - 1].resize(n);
      for (int l = 0; l < n; ++l) {
        Rational inner = 0;
        for (int k = l; k >= 0; --k) inner = inner * x + Rational(t.at(k, l));
        xpart[n - 1][l] = inner;
      }
    }
    for (std::size_t yi = 0; yi < points.size(); ++yi) {
      const Rational& y = points[yi];
      TruncatedSeries fxy(order);
      for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int l = n - 1; l >= 0; --l) acc = acc * y + xpart[n - 1][l];
        fxy.set_coeff(n, acc);
      }
      if (!record(x, y, fxy_residual(x, y, fxy, f1y_by_point[yi], f11)))
        return result;
    }
  }
  return result;
}

KernelRootReport check_kernel_roots(int order) {
  if (order < 1) throw std::invalid_argument("check_kernel_roots: order >= 1");
  KernelRootReport report;

  // (i) x = 1/(1-q) kills 1 - x + xq.
  {
    TruncatedSeries x = series_poly(order, {1, -1}).recip();
    TruncatedSeries residual =
        series_poly(order, {1}) - x + x.shift_up(1);
    report.univariate_x_ok = residual.is_zero();
  }

  // (ii) y1 = (1 - sqrt(1-4q)) / (2q) kills 1 - y + y^2 q; its
  // coefficients are the Catalan numbers.
  {
    TruncatedSeries s = sqrt_one_minus_4q(order + 2);
    TruncatedSeries y1(order + 1);
    for (int i = 0; i <= order + 1; ++i)
      y1.set_coeff(i, -s.coeff(i + 1) / 2);
    TruncatedSeries residual = series_poly(order + 1, {1}) - y1 +
                               (y1 * y1).shift_up(1);
    report.catalan_root_ok = residual.truncate(order).is_zero();
    for (int i = 0; i <= std::min(order + 1, 5); ++i)
      report.catalan_prefix.push_back(y1.coeff(i));
  }

  // (iii) the bivariate kernel (1-y+yq) - x(1-y-q+2yq) vanishes at
  // x = (1-y+yq)/(1-y-q+2yq) for sampled y != 1.
  {
    report.bivariate_ok = true;
    for (const Rational& y : sample_schedule(5)) {
      TruncatedSeries a = series_poly(order, {1 - y, y});
      TruncatedSeries b = series_poly(order, {1 - y, 2 * y - 1});
      TruncatedSeries x = a * b.recip();
      if (!(a - x * b).is_zero()) {
        report.bivariate_ok = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace invseq
