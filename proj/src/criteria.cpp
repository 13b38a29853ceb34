#include "secant/criteria.hpp"

#include <algorithm>
#include <functional>

#include "secant/rational.hpp"

namespace secant {

namespace {

// Euclidean residue in [0, |m|).
std::int64_t emod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + (m < 0 ? -m : m) : r;
}

Rational frac(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

std::int64_t as_int(const Integer& z) { return to_int64(z); }

void check_secant_index(std::int64_t e, std::int64_t f) {
  if (e < 1) throw DomainError("secant length must be at least 1");
  if (f < 0) throw DomainError("defect must be non-negative");
  if (f > e) throw DomainError("defect exceeds length");
}

void check_curve(std::int64_t r, std::int64_t g) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (g < 0) throw DomainError("genus must be non-negative");
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Empty: return "Empty";
    case Status::Nonempty: return "Nonempty";
    case Status::NonemptyForSomeM: return "NonemptyForSomeM";
    case Status::EmptyOrExpectedDim: return "EmptyOrExpectedDim";
    case Status::VeryAmple: return "VeryAmple";
    case Status::NotGuaranteed: return "NotGuaranteed";
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Informational: return "Informational";
  }
  return "?";
}

std::int64_t expected_dim_secant(std::int64_t r, std::int64_t e, std::int64_t f, std::int64_t n) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (n < 0) throw DomainError("n must be non-negative");
  check_secant_index(e, f);
  return r * e - f * (n + 1 - e + f);
}

Verdict theoretical_nonempty(std::int64_t n, std::int64_t r, std::int64_t e, std::int64_t f) {
  check_secant_index(e, f);
  const std::int64_t e0 = n - r + 2;
  Verdict v;
  v.formula_id = "theoretical_bound_e0";
  v.value = e0;
  v.assumptions = {"VERY_AMPLE"};
  v.status = (e > e0 && f <= e - e0) ? Status::Nonempty : Status::NotGuaranteed;
  return v;
}

Verdict nonempty_by_dimension(std::int64_t r, std::int64_t e, std::int64_t f, std::int64_t n) {
  if (r < 2) throw DomainError("rank at least 2 required");
  check_secant_index(e, f);
  const std::int64_t expected = r * e - f * (n + 1 - e + f);
  Verdict v;
  v.formula_id = "nonempty_by_expected_dimension";
  v.value = expected;
  v.status = (0 < f && f < e && expected >= (r - 1) * e) ? Status::Nonempty
                                                         : Status::NotGuaranteed;
  return v;
}

std::int64_t hirschowitz_bound(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t t) {
  if (t < 1 || t > r - 1) throw DomainError("invalid t");
  if (g < 0) throw DomainError("genus must be non-negative");
  const std::int64_t base = t * (r - t) * (g - 1);
  const std::int64_t delta = emod(t * d - base, r);
  return base + delta;
}

Verdict quot_line_dim(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e) {
  check_curve(r, g);
  Verdict v;
  v.formula_id = "quot_line_subsheaf_dim";
  v.value = r * e + d + (r + 1) * (g - 1);
  v.status = *v.value >= 0 ? Status::Nonempty : Status::Empty;
  v.assumptions = {"GENERIC_E"};
  return v;
}

Verdict segre_emptiness(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e,
                        std::int64_t s1) {
  check_curve(r, g);
  if (e < 1) throw DomainError("secant length must be at least 1");
  const std::int64_t threshold = d + r * (2 * g - 2 + e);
  Verdict v;
  v.formula_id = "segre_invariant_emptiness";
  v.value = threshold;
  v.assumptions = {"ALL_M_PIC0"};
  v.status = s1 > threshold ? Status::Empty : Status::NonemptyForSomeM;
  return v;
}

std::int64_t slope_emptiness_range(std::int64_t r, std::int64_t d, std::int64_t g) {
  check_curve(r, g);
  const Rational bound = frac(-d, r) - (2 * g - 2);
  return std::max<std::int64_t>(0, as_int(floor_of(bound)));
}

std::int64_t slope_nonempty_threshold(std::int64_t r, std::int64_t d, std::int64_t g) {
  check_curve(r, g);
  return as_int(ceil_of(frac(-d - (r + 1) * (g - 1), r)));
}

Verdict lange_very_ample(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t s1,
                         std::int64_t ell) {
  if (r < 2) throw DomainError("projective bundle requires rank >= 2");
  if (g < 0) throw DomainError("genus must be non-negative");
  const Rational threshold = frac(d, r) - frac(s1, r) + 2 * g;
  Verdict v;
  v.formula_id = "lange_very_ampleness";
  v.assumptions = {"ALL_L"};
  v.status = Rational(ell) > threshold ? Status::VeryAmple : Status::NotGuaranteed;
  return v;
}

EmptinessRanges semistable_emptiness_ranges(std::int64_t r, std::int64_t d, std::int64_t g) {
  check_curve(r, g);
  EmptinessRanges out;
  // mu(E) < 1 - 2g
  out.hypothesis_holds = frac(d, r) < Rational(1 - 2 * g);
  if (!out.hypothesis_holds) out.caveats.emplace_back("SLOPE_HYPOTHESIS_VIOLATED");
  for (std::int64_t t = 1; t <= r - 1; ++t) {
    const Rational bound = frac(-t * d, r) - (2 * g - 2);
    // largest integer strictly below bound
    const std::int64_t max_e = as_int(ceil_of(bound)) - 1;
    out.ranges.emplace_back(t, std::max<std::int64_t>(0, max_e));
  }
  return out;
}

Verdict general_expected_dim(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e) {
  check_curve(r, g);
  const std::int64_t n = -d - r * (g - 1) - 1;
  if (n < 0) throw DomainError("degree too large for the complete-case theorem");
  Verdict v;
  v.formula_id = "general_bundle_expected_dim";
  v.value = (r + 1) * e - n - 2;
  v.status = *v.value < 0 ? Status::Empty : Status::EmptyOrExpectedDim;
  v.assumptions = {"GENERIC_E", "GENERIC_M", "COMPLETE_SYSTEM"};
  return v;
}

Verdict incomplete_expected_dim(std::int64_t r, std::int64_t e, std::int64_t m_dim) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (m_dim < 0) throw DomainError("subspace dimension must be at least 1");
  Verdict v;
  v.formula_id = "general_subspace_expected_dim";
  v.value = (r + 1) * e - m_dim - 2;
  v.status = *v.value < 0 ? Status::Empty : Status::EmptyOrExpectedDim;
  v.assumptions = {"GENERIC_E", "GENERIC_M", "GENERIC_W"};
  return v;
}

Verdict general_nonempty(std::int64_t r, std::int64_t d, std::int64_t g, std::int64_t e) {
  check_curve(r, g);
  const Rational slope_bound = frac(-d, r) - frac((g - 1) * (r + 1), r);
  Verdict v;
  v.formula_id = "general_bundle_nonempty";
  v.assumptions = {"GENERIC_E", "GENERIC_M"};
  v.status = (e >= g && Rational(e) >= slope_bound) ? Status::Nonempty : Status::NotGuaranteed;
  return v;
}

std::pair<std::int64_t, std::int64_t> projection_dims(std::int64_t dim_b, std::int64_t n,
                                                      std::int64_t m_dim, std::int64_t e,
                                                      std::int64_t f, std::int64_t f_prime) {
  if (!(0 <= f_prime && f_prime <= f && f <= e && e <= m_dim + 1 && m_dim + 1 <= n + 1))
    throw DomainError("index constraints 0 <= f <= e <= m+1 <= n+1 violated");
  return {dim_b - f_prime * (n + 1 - e + f_prime), dim_b - f_prime * (m_dim + 1 - e + f)};
}

Verdict fiber_stratum(std::int64_t r, std::int64_t e, std::int64_t n) {
  if (e <= r) throw DomainError("example requires e >= r+1");
  Verdict v;
  v.formula_id = "fiber_stratum_excess";
  v.value = e * (r - 1) + 1;
  v.status = 2 * r <= n ? Status::Holds : Status::Fails;
  return v;
}

std::int64_t conjectural_bound(std::int64_t r, std::int64_t e, std::int64_t f) {
  return e - f - r;
}

std::vector<CriterionRow> evaluate_criteria(const CriteriaInput& in) {
  std::vector<CriterionRow> rows;
  auto add = [&rows](std::string name, const std::function<Verdict()>& eval) {
    CriterionRow row;
    row.name = std::move(name);
    try {
      row.verdict = eval();
    } catch (const DomainError& err) {
      row.error = err.what();
    }
    rows.push_back(std::move(row));
  };
  auto info = [](std::string id, std::int64_t value, std::vector<std::string> assumptions = {}) {
    return Verdict{Status::Informational, value, std::move(id), std::move(assumptions)};
  };

  const bool has_rdg = in.r && in.d && in.g;

  if (in.r && in.e && in.f && in.n) {
    const auto r = *in.r, e = *in.e, f = *in.f, n = *in.n;
    add("expected_dim_secant", [&] { return info("secant_expected_dim", expected_dim_secant(r, e, f, n)); });
    add("theoretical_nonempty", [&] { return theoretical_nonempty(n, r, e, f); });
    add("nonempty_by_dimension", [&] { return nonempty_by_dimension(r, e, f, n); });
  }
  if (has_rdg) {
    const auto r = *in.r, d = *in.d, g = *in.g;
    for (std::int64_t t = 1; t <= r - 1; ++t) {
      add("hirschowitz_bound[t=" + std::to_string(t) + "]",
          [&] { return info("hirschowitz_bound[t(r-t)]", hirschowitz_bound(r, d, g, t)); });
    }
    if (in.s1 && r >= 2) {
      add("hirschowitz_consistency", [&] {
        const std::int64_t bound = hirschowitz_bound(r, d, g, 1);
        return Verdict{*in.s1 <= bound ? Status::Holds : Status::Fails, bound,
                       "hirschowitz_bound[t(r-t)]", {}};
      });
    }
  }
  if (has_rdg && in.e) {
    add("quot_line_dim", [&] { return quot_line_dim(*in.r, *in.d, *in.g, *in.e); });
  }
  if (has_rdg && in.e && in.s1) {
    add("segre_emptiness", [&] { return segre_emptiness(*in.r, *in.d, *in.g, *in.e, *in.s1); });
  }
  if (has_rdg) {
    const auto r = *in.r, d = *in.d, g = *in.g;
    add("slope_emptiness_range", [&] {
      std::vector<std::string> a{"S1_POSITIVE", "ALL_M_PIC0"};
      if (d > r * (1 - 2 * g)) a.emplace_back("DEGREE_HYPOTHESIS_VIOLATED");
      return info("slope_emptiness_range", slope_emptiness_range(r, d, g), std::move(a));
    });
    add("slope_nonempty_threshold", [&] {
      return info("slope_nonempty_threshold", slope_nonempty_threshold(r, d, g),
                  {"SOME_M_PIC0", "SHARP_IF_S1_GENERIC"});
    });
  }
  if (has_rdg && in.s1 && in.ell) {
    add("lange_very_ample",
        [&] { return lange_very_ample(*in.r, *in.d, *in.g, *in.s1, *in.ell); });
  }
  if (has_rdg && *in.r >= 2) {
    EmptinessRanges ranges;
    std::string failure;
    try {
      ranges = semistable_emptiness_ranges(*in.r, *in.d, *in.g);
    } catch (const DomainError& err) {
      failure = err.what();
    }
    for (const auto& [t, max_e] : ranges.ranges) {
      std::vector<std::string> a{"SEMISTABLE_E", "ALL_M_PIC0"};
      a.insert(a.end(), ranges.caveats.begin(), ranges.caveats.end());
      rows.push_back({"semistable_emptiness[t=" + std::to_string(t) + "]",
                      info("semistable_emptiness_range", max_e, std::move(a)), {}});
    }
    if (!failure.empty()) rows.push_back({"semistable_emptiness", std::nullopt, failure});
  }
  if (has_rdg && in.e) {
    add("general_expected_dim", [&] { return general_expected_dim(*in.r, *in.d, *in.g, *in.e); });
  }
  if (in.r && in.e && in.n) {
    add("incomplete_expected_dim", [&] { return incomplete_expected_dim(*in.r, *in.e, *in.n); });
  }
  if (has_rdg && in.e) {
    add("general_nonempty", [&] { return general_nonempty(*in.r, *in.d, *in.g, *in.e); });
  }
  if (in.r && in.e && in.n) {
    add("fiber_stratum", [&] { return fiber_stratum(*in.r, *in.e, *in.n); });
  }
  if (in.r && in.e && in.f) {
    add("conjectural_bound", [&] {
      return info("conjectural_dim_bound", conjectural_bound(*in.r, *in.e, *in.f), {"CONJECTURE"});
    });
  }
  return rows;
}

}  // namespace secant
