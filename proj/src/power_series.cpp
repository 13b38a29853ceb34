#include "secant/power_series.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace secant {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a power series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

PowerSeries PowerSeries::from_polynomial(std::span<const Rational> coeffs, std::size_t order) {
  PowerSeries out(order);
  const std::size_t n = std::min(coeffs.size(), order + 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.coeffs_[i] = coeffs[i];
    out.coeffs_[i].canonicalize();
  }
  return out;
}

PowerSeries PowerSeries::from_polynomial(std::initializer_list<Rational> coeffs,
                                         std::size_t order) {
  return from_polynomial(std::span<const Rational>(coeffs.begin(), coeffs.size()), order);
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries out(order);
  out.coeffs_[0] = c;
  out.coeffs_[0].canonicalize();
  return out;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries out(order);
  if (order >= 1) out.coeffs_[1] = 1;
  return out;
}

const Rational& PowerSeries::coeff(std::size_t k) const {
  if (k > order()) throw DomainError("coefficient beyond truncation order");
  return coeffs_[k];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw DomainError("cannot extend a series beyond its truncation order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c[i] = a.coeff(i) + b.coeff(i);
  return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c[i] = a.coeff(i) - b.coeff(i);
  return PowerSeries(std::move(c));
}

PowerSeries ps_neg(const PowerSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return PowerSeries(std::move(c));
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += ac[i] * bc[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_inv(const PowerSeries& a) {
  const auto ac = a.coeffs();
  if (ac[0] == 0) throw DomainError("not invertible");
  const Rational inv0 = 1 / ac[0];
  std::vector<Rational> b(a.order() + 1, Rational(0));
  b[0] = inv0;
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += ac[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return PowerSeries(std::move(b));
}

PowerSeries ps_pow(const PowerSeries& a, long k) {
  if (k < 0) {
    // Negating LONG_MIN is not representable; such exponents are nonsense here anyway.
    if (k == std::numeric_limits<long>::min()) throw DomainError("exponent out of range");
    return ps_pow(ps_inv(a), -k);
  }
  PowerSeries result = PowerSeries::constant(1, a.order());
  PowerSeries base = a;
  for (unsigned long e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
    if (e & 1UL) result = ps_mul(result, base);
    if (e > 1) base = ps_mul(base, base);
  }
  return result;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  if (g.coeff(0) != 0) throw DomainError("composition requires g(0)=0");
  const std::size_t order = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncated(order);
  // Horner: f_T, then acc*g + f_i down to i = 0.
  PowerSeries acc = PowerSeries::constant(f.coeff(order), order);
  for (std::size_t i = order; i-- > 0;) {
    acc = ps_mul(acc, inner);
    acc = ps_add(acc, PowerSeries::constant(f.coeff(i), order));
  }
  return acc;
}

PowerSeries ps_revert(const PowerSeries& f) {
  const std::size_t order = f.order();
  if (order == 0 || f.coeff(0) != 0 || f.coeff(1) == 0) throw DomainError("not reversible");
  const auto fc = f.coeffs();
  const Rational inv_lead = 1 / fc[1];

  // powers[j][k] = [q^k] g(q)^j for the partial reversion g known so far.
  // [q^k] g^j with j >= 2 only involves g_1..g_{k-1}, so each step solves a
  // single linear equation f_1 g_k + sum_{j>=2} f_j [q^k] g^j = delta_{k,1}.
  std::vector<std::vector<Rational>> powers(order + 1,
                                            std::vector<Rational>(order + 1, Rational(0)));
  std::vector<Rational> g(order + 1, Rational(0));
  for (std::size_t k = 1; k <= order; ++k) {
    Rational known = 0;
    for (std::size_t j = 2; j <= k; ++j) {
      Rational p = 0;
      for (std::size_t i = 1; i + (j - 1) <= k; ++i) p += g[i] * powers[j - 1][k - i];
      powers[j][k] = p;
      known += fc[j] * p;
    }
    g[k] = ((k == 1 ? Rational(1) : Rational(0)) - known) * inv_lead;
    powers[1][k] = g[k];
  }
  return PowerSeries(std::move(g));
}

Rational ps_coeff(const PowerSeries& a, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > a.order())
    throw DomainError("coefficient beyond truncation order");
  return a.coeff(static_cast<std::size_t>(k));
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& a) {
  bool first = true;
  for (std::size_t i = 0; i <= a.order(); ++i) {
    const Rational& c = a.coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i == 1) os << 't';
    if (i > 1) os << "t^" << i;
  }
  if (first) os << '0';
  return os << " + O(t^" << a.order() + 1 << ')';
}

}  // namespace secant
