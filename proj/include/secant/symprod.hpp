#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "secant/rational.hpp"

namespace secant {

/// Element of the truncated intersection ring of the symmetric product C_e
/// of a genus-g curve, generated by the divisor class x and the pullback
/// theta of the theta divisor.
///
/// Monomials x^a theta^b with a + b > e (beyond the dimension of C_e) or
/// b > g (integrate to zero, and x, theta commute so they never come back
/// down in degree) are dropped.
class SymClass {
 public:
  using Monomial = std::pair<int, int>;  // (a, b) for x^a theta^b

  SymClass(int e, int g);

  static SymClass one(int e, int g);
  static SymClass x(int e, int g);
  static SymClass theta(int e, int g);
  static SymClass monomial(int e, int g, int a, int b, const Rational& c);

  int e() const { return e_; }
  int g() const { return g_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(int a, int b) const;
  /// Adds c to the coefficient of x^a theta^b (dropped if truncated away).
  void add_term(int a, int b, const Rational& c);

  /// Part of cohomological degree k (a + b = k).
  SymClass degree_part(int k) const;

  bool operator==(const SymClass&) const = default;

 private:
  bool kept(int a, int b) const { return a >= 0 && b >= 0 && a + b <= e_ && b <= g_; }

  int e_;
  int g_;
  std::map<Monomial, Rational> terms_;  // no zero entries
};

SymClass sym_add(const SymClass& u, const SymClass& v);
SymClass sym_scale(const SymClass& u, const Rational& c);
/// Product in the truncated ring; throws "incompatible rings" on (e, g) mismatch.
SymClass sym_mul(const SymClass& u, const SymClass& v);
/// Inverse of a class with constant term 1 (the rest is nilpotent).
SymClass sym_inverse_unipotent(const SymClass& u);

/// Degree on C_e: x^{e-b} theta^b integrates to g!/(g-b)!; lower degrees give 0.
Rational sym_integrate(const SymClass& u);

/// Total Chern class of the secant bundle of a degree-N line bundle on C_e:
/// (1 - x)^{-(N-e+1-g)} * exp(theta / (1 - x)).
SymClass sym_chern_taut(std::int64_t N, int e, int g);

/// Integral over C_e of the Segre class 1/c of the secant bundle.
Rational sym_segre_integral(std::int64_t N, int e, int g);

}  // namespace secant
