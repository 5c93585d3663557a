#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invseq/series.hpp"

namespace invseq {

// The three auxiliary generating functions built from f_n(k, l):
//   L(x;q) = sum_n ( sum_k f_n(k, n-1) x^k ) q^n
//   D(x;q) = sum_n ( sum_{l=0}^{n-2} f_n(l, l) x^l ) q^n
//   F(x,y;q) = sum_n ( sum_{l} sum_{k<=l} f_n(k, l) x^k y^l ) q^n
enum class GfKind { L, D, F };

// Builds the q-expansion coefficient-by-coefficient from the DP triangle
// with x, y evaluated at the given rationals. y is ignored for L and D.
TruncatedSeries assemble_from_dp(GfKind which, const Rational& x,
                                 const Rational& y, int order);

// q(1-q)^2 / ((1-2q)(1-xq)).
TruncatedSeries L_closed(const Rational& x, int order);

// (1-4q + (1-2q) sqrt(1-4q)) / (2(1-q)(1-4q)) - 1.
TruncatedSeries F11_closed(int order);

// q/(1-xq) * F11_closed: the D(x;q) closed form.
TruncatedSeries D_closed(const Rational& x, int order);

// Piecewise closed form for F: the general point uses the functional
// equation solved for F(x,y), the x=1 and y=1 lines use their dedicated
// identities.
TruncatedSeries F_closed(const Rational& x, const Rational& y, int order);

enum class IdentityId { GGf, FuncG, D1, D2, Fx1, Fxy, F1y };

std::optional<IdentityId> parse_identity(const std::string& name);
std::string identity_name(IdentityId id);
// Number of free parameters (0, 1 over x or y, or 2).
int identity_arity(IdentityId id);

// Left side minus right side, with every L/D/F occurrence assembled from
// the DP and parameter denominators cleared symbolically before
// evaluation. Throws std::domain_error at a singular parameter point
// (x = 1 or y = 1 where the uncleaned identity divides by 1-x or 1-y).
TruncatedSeries check_identity(IdentityId id, const Rational& x,
                               const Rational& y, int order);

struct IdentityFailure {
  Rational x;
  Rational y;
  int coeff_index = -1;
  Rational value;
};

struct IdentityResult {
  bool pass = true;
  std::optional<IdentityFailure> failure;
};

// Runs check_identity over the whole sample schedule (one value set per
// free parameter; the full grid for two-parameter identities).
IdentityResult check_identity_schedule(IdentityId id, int samples, int order);

struct KernelRootReport {
  bool univariate_x_ok = false;   // 1 - x + xq = 0 at x = 1/(1-q)
  bool catalan_root_ok = false;   // 1 - y1 + y1^2 q = 0, y1 = (1-sqrt(1-4q))/(2q)
  bool bivariate_ok = false;      // section-5 kernel vanishes at its x-root
  std::vector<Rational> catalan_prefix;  // leading coefficients of y1
  bool all_ok() const {
    return univariate_x_ok && catalan_root_ok && bivariate_ok;
  }
};

KernelRootReport check_kernel_roots(int order);

// Deterministic schedule of distinct rational sample values; never
// contains 1 (nor any other requested exclusion).
std::vector<Rational> sample_schedule(int count);

}  // namespace invseq
