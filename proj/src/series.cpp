#include "invseq/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace invseq {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(order + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : TruncatedSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("more coefficients than the order admits");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs_[i] = std::move(coeffs[i]);
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order()) throw std::out_of_range("coefficient index");
  return coeffs_[i];
}

void TruncatedSeries::set_coeff(int i, Rational value) {
  if (i < 0 || i > order()) throw std::out_of_range("coefficient index");
  coeffs_[i] = std::move(value);
}

bool TruncatedSeries::is_zero() const { return first_nonzero() == -1; }

int TruncatedSeries::first_nonzero() const {
  for (int i = 0; i <= order(); ++i)
    if (coeffs_[i] != 0) return i;
  return -1;
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series truncation orders differ");
}
}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i)
    out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i)
    out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] * scalar;
  return out;
}

TruncatedSeries TruncatedSeries::recip() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("recip: constant term is zero");
  TruncatedSeries out(order());
  out.coeffs_[0] = Rational(1) / coeffs_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = -acc / coeffs_[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::shift_up(int m) const {
  if (m < 0) throw std::invalid_argument("shift_up: m must be >= 0");
  TruncatedSeries out(order());
  for (int i = 0; i + m <= order(); ++i) out.coeffs_[i + m] = coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const {
  if (new_order > order())
    throw std::invalid_argument("truncate: cannot extend a series");
  TruncatedSeries out(new_order);
  for (int i = 0; i <= new_order; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string TruncatedSeries::pretty() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && i > 0;
    if (!unit) out += rational_to_string(c);
    if (i > 0) {
      if (!unit) out += "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string TruncatedSeries::to_json() const {
  std::string out = "[";
  for (int i = 0; i <= order(); ++i) {
    if (i) out += ",";
    out += "\"" + rational_to_string(coeffs_[i]) + "\"";
  }
  return out + "]";
}

TruncatedSeries series_poly(int order, std::vector<Rational> coeffs) {
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries one_minus_4q(int order) {
  TruncatedSeries t(order);
  t.set_coeff(0, 1);
  if (order >= 1) t.set_coeff(1, -4);
  return t;
}

TruncatedSeries sqrt_one_minus_4q(int order) {
  const TruncatedSeries target = one_minus_4q(order);
  TruncatedSeries s = series_poly(order, {1});
  // Each step doubles the number of correct coefficients.
  const int steps =
      order == 0 ? 0 : static_cast<int>(std::ceil(std::log2(order + 1)));
  const Rational half(1, 2);
  for (int i = 0; i < steps; ++i) s = (s + target * s.recip()) * half;
  return s;
}

}  // namespace invseq
