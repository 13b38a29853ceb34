#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secant {

enum class Status {
  Empty,
  Nonempty,
  /// Nonempty for some degree-0 twist M (the negative side of an iff over all M).
  NonemptyForSomeM,
  /// Empty, or of the expected dimension.
  EmptyOrExpectedDim,
  VeryAmple,
  NotGuaranteed,
  Holds,
  Fails,
  /// A threshold reported without an existence claim.
  Informational,
};

std::string_view to_string(Status s);

/// A criterion's answer. `value` carries a dimension or bound when the
/// criterion produces one; `assumptions` lists the hypotheses the answer
/// depends on (GENERIC_E, ALL_M_PIC0, ...).
struct Verdict {
  Status status = Status::NotGuaranteed;
  std::optional<std::int64_t> value;
  std::string formula_id;
  std::vector<std::string> assumptions;
};

/// Segre invariants s_t(E) of a bundle, supplied by the caller.
struct StabilityInput {
  std::int64_t s1 = 0;
  std::map<std::int64_t, std::int64_t> s_t;
};

// Expected dimension re - f(n+1-e+f) of the secant loci H^{e-f}_e and Q^{e-f}_e.
std::int64_t expected_dim_secant(std::int64_t r, std::int64_t e, std::int64_t f, std::int64_t n);

/// Nonempty when e > e0 := n - r + 2 and f <= e - e0, for a very ample series
/// of dimension n on an r-dimensional variety.
Verdict theoretical_nonempty(std::int64_t n, std::int64_t r, std::int64_t e, std::int64_t f);

/// Nonempty when 0 < f < e and the expected dimension is at least (r-1)e. Rank >= 2.
Verdict nonempty_by_dimension(std::int64_t r, std::int64_t e, std::int64_t f, std::int64_t n);

/// Hirschowitz bound t(r-t)(g-1) + delta on s_t(E), where delta in [0, r-1]
/// satisfies t(r-t)(g-1) + delta = td (mod r).
std::int64_t hirschowitz_bound(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t t);

/// Dimension re + d + (r+1)(g-1) of the Quot scheme of degree -e line
/// subsheaves of K_C M^{-1} (x) E, E general.
Verdict quot_line_dim(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e);

/// Empty for every degree-0 twist iff s1 > d + r(2g - 2 + e).
Verdict segre_emptiness(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e,
                        std::int64_t s1);

/// Largest e with e <= mu(E^*) - (2g-2), clamped at 0. Meaningful when
/// s1 > 0 and d <= r(1-2g).
std::int64_t slope_emptiness_range(std::int64_t r, std::int64_t d, std::int64_t g);

/// Smallest e with e >= mu(E^*) - (r+1)(g-1)/r. Above it Q^{e-1}_e is
/// nonempty for some twist; reported only as a threshold.
std::int64_t slope_nonempty_threshold(std::int64_t r, std::int64_t d, std::int64_t g);

/// O(1) (x) pi^*L very ample on P(E) for all L of degree ell iff
/// ell > mu(E) - s1/r + 2g.
Verdict lange_very_ample(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t s1,
                         std::int64_t ell);

struct EmptinessRanges {
  /// (t, max_e): the loci for the t-th exterior power are empty for 1 <= e <= max_e.
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  /// False when mu(E) < 1 - 2g fails; the ranges are still computed.
  bool hypothesis_holds = true;
  std::vector<std::string> caveats;
};

EmptinessRanges semistable_emptiness_ranges(std::int64_t r, std::int64_t d, std::int64_t g);

/// Complete linear system, E and M general: value (r+1)e - n - 2 with
/// n = -d - r(g-1) - 1.
Verdict general_expected_dim(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e);

/// General subspace W of dimension m_dim + 1: value (r+1)e - m_dim - 2.
Verdict incomplete_expected_dim(std::int64_t r, std::int64_t e, std::int64_t m_dim);

/// Nonempty for generic M when e >= max{g, -d/r - (g-1)(r+1)/r}.
Verdict general_nonempty(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e);

/// (d1, d2) with d1 = dimB - f'(n+1-e+f'), d2 = dimB - f'(m+1-e+f).
std::pair<std::int64_t, std::int64_t> projection_dims(std::int64_t dim_b, std::int64_t n,
                                                      std::int64_t m_dim, std::int64_t e,
                                                      std::int64_t f, std::int64_t f_prime);

/// Stratum of length-e subschemes in a fiber of P(E): dimension e(r-1)+1,
/// in excess of the expected dimension iff 2r <= n.
Verdict fiber_stratum(std::int64_t r, std::int64_t e, std::int64_t n);

/// Conjectured upper bound e - f - r on dim Q^{e-f}_e.
std::int64_t conjectural_bound(std::int64_t r, std::int64_t e, std::int64_t f);

/// Parameters available to a criteria sweep; absent fields disable the
/// criteria that need them.
struct CriteriaInput {
  std::optional<std::int64_t> r, d, g, e, f, n, s1, ell;
};

struct CriterionRow {
  std::string name;
  /// Set when the criterion applied.
  std::optional<Verdict> verdict;
  /// Set instead of a verdict when a precondition failed.
  std::string error;
};

/// Every criterion whose inputs are present, in a fixed order.
std::vector<CriterionRow> evaluate_criteria(const CriteriaInput& in);

}  // namespace secant
