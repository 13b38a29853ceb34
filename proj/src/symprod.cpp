#include "secant/symprod.hpp"

#include <algorithm>

namespace secant {

namespace {

// Generalized binomial C(k + i - 1, i): coefficient of x^i in (1 - x)^{-k}, any integer k.
Rational neg_binomial(std::int64_t k, int i) {
  Rational c = 1;
  for (int j = 0; j < i; ++j) c = c * Rational(k + j) / Rational(j + 1);
  return c;
}

void require_same_ring(const SymClass& u, const SymClass& v) {
  if (u.e() != v.e() || u.g() != v.g()) throw DomainError("incompatible rings");
}

}  // namespace

SymClass::SymClass(int e, int g) : e_(e), g_(g) {
  if (e < 0) throw DomainError("symmetric product length must be non-negative");
  if (g < 0) throw DomainError("genus must be non-negative");
}

SymClass SymClass::one(int e, int g) { return monomial(e, g, 0, 0, 1); }
SymClass SymClass::x(int e, int g) { return monomial(e, g, 1, 0, 1); }
SymClass SymClass::theta(int e, int g) { return monomial(e, g, 0, 1, 1); }

SymClass SymClass::monomial(int e, int g, int a, int b, const Rational& c) {
  SymClass out(e, g);
  out.add_term(a, b, c);
  return out;
}

Rational SymClass::coeff(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymClass::add_term(int a, int b, const Rational& c) {
  if (!kept(a, b) || c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymClass SymClass::degree_part(int k) const {
  SymClass out(e_, g_);
  for (const auto& [mono, c] : terms_)
    if (mono.first + mono.second == k) out.terms_.emplace(mono, c);
  return out;
}

SymClass sym_add(const SymClass& u, const SymClass& v) {
  require_same_ring(u, v);
  SymClass out = u;
  for (const auto& [mono, c] : v.terms()) out.add_term(mono.first, mono.second, c);
  return out;
}

SymClass sym_scale(const SymClass& u, const Rational& s) {
  SymClass out(u.e(), u.g());
  for (const auto& [mono, c] : u.terms()) out.add_term(mono.first, mono.second, c * s);
  return out;
}

SymClass sym_mul(const SymClass& u, const SymClass& v) {
  require_same_ring(u, v);
  SymClass out(u.e(), u.g());
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms())
      out.add_term(mu.first + mv.first, mu.second + mv.second, cu * cv);
  return out;
}

SymClass sym_inverse_unipotent(const SymClass& u) {
  if (u.coeff(0, 0) != 1) throw DomainError("class must have constant term 1");
  // u = 1 + nil with nil^(e+1) = 0, so 1/u = sum_k (-nil)^k for k <= e.
  const SymClass minus_nil = sym_add(SymClass::one(u.e(), u.g()), sym_scale(u, -1));
  SymClass result = SymClass::one(u.e(), u.g());
  SymClass power = SymClass::one(u.e(), u.g());
  for (int k = 1; k <= u.e(); ++k) {
    power = sym_mul(power, minus_nil);
    result = sym_add(result, power);
  }
  return result;
}

Rational sym_integrate(const SymClass& u) {
  Rational total = 0;
  for (const auto& [mono, c] : u.terms()) {
    const auto [a, b] = mono;
    if (a + b != u.e()) continue;
    Rational falling = 1;
    for (int j = 0; j < b; ++j) falling *= u.g() - j;
    total += c * falling;
  }
  return total;
}

SymClass sym_chern_taut(std::int64_t N, int e, int g) {
  if (e < 1) throw DomainError("secant length must be at least 1");
  SymClass out(e, g);
  const std::int64_t k = N - e + 1 - g;
  // exp(theta/(1-x)) = sum_j theta^j/j! * (1-x)^{-j}, and theta^j vanishes for j > min(e, g).
  Rational inv_fact = 1;
  for (int j = 0; j <= std::min(e, g); ++j) {
    if (j > 0) inv_fact /= j;
    // (1-x)^{-k} (1-x)^{-j} = (1-x)^{-(k+j)}
    for (int a = 0; a + j <= e; ++a) out.add_term(a, j, inv_fact * neg_binomial(k + j, a));
  }
  return out;
}

Rational sym_segre_integral(std::int64_t N, int e, int g) {
  if (e < 1) throw DomainError("secant length must be at least 1");
  if (g < 0) throw DomainError("genus must be non-negative");
  return sym_integrate(sym_inverse_unipotent(sym_chern_taut(N, e, g)));
}

}  // namespace secant
