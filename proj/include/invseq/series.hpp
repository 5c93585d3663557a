#pragma once

#include <string>
#include <vector>

#include "invseq/bigint.hpp"

namespace invseq {

// Formal power series in q modulo q^{N+1} with exact rational
// coefficients. Immutable value semantics; arithmetic never reads beyond
// the truncation order, and mixing orders is an error.
class TruncatedSeries {
 public:
  // The zero series of the given order.
  explicit TruncatedSeries(int order);
  // Low-order coefficients c0, c1, ...; the rest are zero. Throws when
  // more than order+1 coefficients are supplied.
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  void set_coeff(int i, Rational value);

  bool is_zero() const;
  // Index of the first nonzero coefficient, or -1 for the zero series.
  int first_nonzero() const;

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const Rational& scalar) const;

  // Multiplicative inverse mod q^{N+1}; requires a nonzero constant term.
  TruncatedSeries recip() const;

  // Multiplication by q^m (coefficients above the order fall off).
  TruncatedSeries shift_up(int m) const;

  // Restriction to a lower order.
  TruncatedSeries truncate(int new_order) const;

  bool operator==(const TruncatedSeries& rhs) const = default;

  // "c0 + c1*q + c2*q^2 + ..." with zero terms omitted.
  std::string pretty() const;
  // JSON array of coefficient strings "p/q" in index order.
  std::string to_json() const;

 private:
  std::vector<Rational> coeffs_;
};

// Shorthand for a polynomial viewed at the given truncation order.
TruncatedSeries series_poly(int order, std::vector<Rational> coeffs);

// 1 - 4q at the given order (valid even at order 0).
TruncatedSeries one_minus_4q(int order);

// The unique series s with s^2 = 1 - 4q and s(0) = 1, by Newton iteration.
TruncatedSeries sqrt_one_minus_4q(int order);

std::string rational_to_string(const Rational& r);

}  // namespace invseq
