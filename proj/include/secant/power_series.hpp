#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "secant/rational.hpp"

namespace secant {

/// Truncated formal power series a_0 + a_1 t + ... + a_T t^T + O(t^{T+1})
/// with exact rational coefficients. The truncation order T is part of the
/// value: two series compare equal only if their orders agree.
///
/// Binary operations truncate to the smaller input order and never pad,
/// so a result never claims a coefficient that was not determined by the
/// inputs.
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order);

  /// Coefficients c_0..c_T; the order is coeffs.size() - 1 (must be >= 1 entry).
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// A polynomial read to the given order: missing terms are zero, terms
  /// beyond the order are dropped.
  static PowerSeries from_polynomial(std::span<const Rational> coeffs, std::size_t order);
  static PowerSeries from_polynomial(std::initializer_list<Rational> coeffs, std::size_t order);

  static PowerSeries constant(const Rational& c, std::size_t order);
  /// The series t (zero if order is 0).
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of t^k; throws DomainError when k > order().
  const Rational& coeff(std::size_t k) const;

  /// The same series read to a lower (or equal) order.
  PowerSeries truncated(std::size_t order) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_neg(const PowerSeries& a);
PowerSeries ps_scale(const PowerSeries& a, const Rational& c);
/// Cauchy product truncated to the smaller order.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// Multiplicative inverse; requires a nonzero constant term.
PowerSeries ps_inv(const PowerSeries& a);
/// Integer power; negative exponents invert first.
PowerSeries ps_pow(const PowerSeries& a, long k);
/// f(g(t)); requires g(0) = 0.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);
/// Compositional inverse g with f(g(q)) = q; requires f(0) = 0 and f'(0) != 0.
PowerSeries ps_revert(const PowerSeries& f);
/// Coefficient of t^k with a signed index; out-of-range k throws.
Rational ps_coeff(const PowerSeries& a, long k);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return ps_add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return ps_sub(a, b); }
inline PowerSeries operator-(const PowerSeries& a) { return ps_neg(a); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

/// Human-readable form, e.g. "1 - 2*t + 4*t^2 + O(t^3)".
std::ostream& operator<<(std::ostream& os, const PowerSeries& a);

}  // namespace secant
