#include "secant/quot_enum.hpp"

#include <algorithm>

namespace secant {

namespace {

PowerSeries one_plus_t(std::size_t order) {
  return PowerSeries::from_polynomial({Rational(1), Rational(1)}, order);
}

bool odd(std::int64_t k) { return (k % 2) != 0; }

}  // namespace

void ScrollParams::validate() const {
  if (g < 0) throw DomainError("genus must be non-negative");
  if (r < 1) throw DomainError("rank must be at least 1");
}

PowerSeries substitution_series(std::int64_t r, std::size_t order) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (order < 1) throw DomainError("substitution series needs order >= 1");
  const PowerSeries q = ps_mul(PowerSeries::variable(order), ps_pow(one_plus_t(order), r));
  return odd(r) ? ps_neg(q) : q;
}

PowerSeries taut_series(const ScrollParams& params, std::size_t order) {
  params.validate();
  const std::int64_t r = params.r;
  const PowerSeries a1 = one_plus_t(order);
  const PowerSeries denom = PowerSeries::from_polynomial({Rational(1), Rational(r + 1)}, order);
  const PowerSeries b = ps_mul(ps_pow(a1, r + 1), ps_inv(denom));
  return ps_mul(ps_pow(a1, params.twisted_degree()), ps_pow(b, 1 - params.g));
}

PowerSeries segre_generating_series(const ScrollParams& params, std::size_t order) {
  params.validate();
  // Reversion needs a linear term, so work at order >= 1 and cut back.
  const std::size_t work = std::max<std::size_t>(order, 1);
  const PowerSeries t_of_q = ps_revert(substitution_series(params.r, work));
  return ps_compose(taut_series(params, work), t_of_q).truncated(order);
}

Rational segre_integral(const ScrollParams& params, std::int64_t e) {
  if (e < 0) throw DomainError("secant length must be non-negative");
  const auto k = static_cast<std::size_t>(e);
  return segre_generating_series(params, k + kGuardTerms).coeff(k);
}

CountReport count_defective_secants(const ScrollParams& params, std::int64_t e, std::int64_t n) {
  params.validate();
  if (e < 1) throw DomainError("secant length must be at least 1");
  if (n < 0) throw DomainError("dim V = n + 1 must be at least 1");

  CountReport report;
  report.params = params;
  report.e = e;
  report.n = n;
  report.raw_coefficient = segre_integral(params, e);
  if (!is_integer(report.raw_coefficient)) throw InternalError("integrality violated");

  report.expected_dim_zero = params.r * e == n + 2 - e;
  report.caveats.emplace_back(kCaveatGeneric);
  if (report.expected_dim_zero) {
    Integer value = report.raw_coefficient.get_num();
    if (odd(params.r * e)) value = -value;
    report.virtual_count = value;
  } else {
    report.caveats.emplace_back(kCaveatNotDimZero);
  }
  return report;
}

}  // namespace secant
