#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secant/power_series.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Numeric invariants of a curve C of genus g, a bundle E of rank r and
/// degree d, and a twisting line bundle M of degree m.
struct ScrollParams {
  std::int64_t g = 0;
  std::int64_t r = 1;
  std::int64_t d = 0;
  std::int64_t m = 0;

  /// deg(E^* (x) M) = r*m - d.
  std::int64_t twisted_degree() const { return r * m - d; }

  /// Throws DomainError unless g >= 0 and r >= 1.
  void validate() const;
};

inline constexpr const char* kCaveatGeneric = "REQUIRES_GENERIC_(E,M,V)";
inline constexpr const char* kCaveatNotDimZero = "NOT_EXPECTED_DIM_ZERO";

/// Count of defective e-secant loci Q^{e-1}_e(V) for dim V = n + 1.
struct CountReport {
  ScrollParams params;
  std::int64_t e = 1;
  std::int64_t n = 0;
  /// Coefficient of q^e in the generating series.
  Rational raw_coefficient;
  /// (-1)^{re} * raw_coefficient; absent outside the expected-dimension-zero regime.
  std::optional<Integer> virtual_count;
  bool expected_dim_zero = false;
  std::vector<std::string> caveats;
};

/// q(t) = (-1)^r t (1+t)^r.
PowerSeries substitution_series(std::int64_t r, std::size_t order);

/// (1+t)^N * ((1+t)^{r+1} / (1+(r+1)t))^{1-g} with N = r*m - d, in the variable t.
PowerSeries taut_series(const ScrollParams& params, std::size_t order);

/// sum_e q^e * integral over Quot^e(E^*) of s(M^[e]), to the given order in q.
PowerSeries segre_generating_series(const ScrollParams& params, std::size_t order);

/// Coefficient of q^e, extracted from the series at order e + kGuardTerms.
Rational segre_integral(const ScrollParams& params, std::int64_t e);

inline constexpr std::size_t kGuardTerms = 2;

CountReport count_defective_secants(const ScrollParams& params, std::int64_t e, std::int64_t n);

}  // namespace secant
