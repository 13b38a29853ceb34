#include <doctest.h>

#include <algorithm>

#include "secant/criteria.hpp"
#include "secant/rational.hpp"

using namespace secant;

namespace {

bool assumes(const Verdict& v, std::string_view code) {
  return std::find(v.assumptions.begin(), v.assumptions.end(), code) != v.assumptions.end();
}

}  // namespace

TEST_CASE("expected_dim_secant") {
  CHECK(expected_dim_secant(2, 3, 0, 7) == 6);
  CHECK(expected_dim_secant(2, 2, 1, 3) == 1);
  CHECK(expected_dim_secant(1, 2, 1, 2) == 0);
  CHECK_THROWS_WITH_AS(expected_dim_secant(2, 2, 3, 3), "defect exceeds length", DomainError);
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t e = 1; e <= 6; ++e)
      for (std::int64_t n = 0; n <= 8; ++n) CHECK(expected_dim_secant(r, e, 0, n) == r * e);
}

TEST_CASE("theoretical_nonempty") {
  const Verdict v = theoretical_nonempty(5, 3, 6, 2);
  CHECK(v.status == Status::Nonempty);
  CHECK(v.value == 4);
  CHECK(assumes(v, "VERY_AMPLE"));
  CHECK(theoretical_nonempty(5, 3, 4, 1).status == Status::NotGuaranteed);
  CHECK(theoretical_nonempty(5, 3, 6, 3).status == Status::NotGuaranteed);
}

TEST_CASE("nonempty_by_dimension") {
  CHECK(nonempty_by_dimension(2, 3, 1, 4).status == Status::Nonempty);
  CHECK(nonempty_by_dimension(2, 3, 1, 6).status == Status::NotGuaranteed);
  CHECK(nonempty_by_dimension(3, 2, 2, 1).status == Status::NotGuaranteed);
  CHECK_THROWS_WITH_AS(nonempty_by_dimension(1, 3, 1, 4), "rank at least 2 required", DomainError);
}

TEST_CASE("hirschowitz_bound") {
  CHECK(hirschowitz_bound(2, 0, 2, 1) == 2);
  CHECK(hirschowitz_bound(2, 1, 2, 1) == 1);
  // base -2, Euclidean residue of 0 - (-2) mod 3 is 2
  CHECK(hirschowitz_bound(3, 0, 0, 1) == 0);
  // negative degree: base 2*1*1 = 2, td = -10, delta = (-10 - 2) mod 3 = 0
  CHECK(hirschowitz_bound(3, -5, 2, 2) == 2);
  CHECK_THROWS_WITH_AS(hirschowitz_bound(3, 0, 2, 0), "invalid t", DomainError);
  CHECK_THROWS_WITH_AS(hirschowitz_bound(3, 0, 2, 3), "invalid t", DomainError);
}

TEST_CASE("hirschowitz delta lies in [0, r-1] and satisfies the congruence") {
  for (std::int64_t r = 2; r <= 6; ++r)
    for (std::int64_t d = -20; d <= 20; ++d)
      for (std::int64_t g = 0; g <= 5; ++g)
        for (std::int64_t t = 1; t < r; ++t) {
          const std::int64_t bound = hirschowitz_bound(r, d, g, t);
          const std::int64_t delta = bound - t * (r - t) * (g - 1);
          CHECK(delta >= 0);
          CHECK(delta <= r - 1);
          CHECK((bound - t * d) % r == 0);
        }
}

TEST_CASE("quot_line_dim") {
  Verdict v = quot_line_dim(2, -9, 2, 3);
  CHECK(v.value == 0);
  CHECK(v.status == Status::Nonempty);
  CHECK(assumes(v, "GENERIC_E"));
  v = quot_line_dim(2, -9, 2, 2);
  CHECK(v.value == -2);
  CHECK(v.status == Status::Empty);
  v = quot_line_dim(1, 0, 0, 1);
  CHECK(v.value == -1);
  CHECK(v.status == Status::Empty);
}

TEST_CASE("segre_emptiness") {
  Verdict v = segre_emptiness(2, -10, 2, 1, 0);
  CHECK(v.status == Status::Empty);
  CHECK(v.value == -4);
  CHECK(segre_emptiness(2, -10, 2, 3, 0).status == Status::NonemptyForSomeM);
  v = segre_emptiness(1, -6, 0, 2, 0);
  CHECK(v.status == Status::Empty);
  CHECK(v.value == -6);
  CHECK_THROWS_AS(segre_emptiness(2, -10, 2, 0, 0), DomainError);
}

TEST_CASE("segre_emptiness is monotone in e") {
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t d = -12; d <= 12; d += 3)
      for (std::int64_t g = 0; g <= 4; ++g)
        for (std::int64_t e = 2; e <= 8; ++e)
          for (std::int64_t s1 = -10; s1 <= 10; ++s1)
            if (segre_emptiness(r, d, g, e, s1).status == Status::Empty)
              CHECK(segre_emptiness(r, d, g, e - 1, s1).status == Status::Empty);
}

TEST_CASE("slope ranges") {
  CHECK(slope_emptiness_range(2, -10, 2) == 3);
  CHECK(slope_emptiness_range(2, -9, 2) == 2);
  CHECK(slope_emptiness_range(1, -4, 1) == 4);
  CHECK(slope_emptiness_range(2, 0, 3) == 0);
  // e >= 5 - 3/2 * 1 = 3.5
  CHECK(slope_nonempty_threshold(2, -10, 2) == 4);
  CHECK(slope_nonempty_threshold(1, 0, 0) == 2);
}

TEST_CASE("lange_very_ample") {
  Verdict v = lange_very_ample(2, 0, 2, 2, 4);
  CHECK(v.status == Status::VeryAmple);
  CHECK(assumes(v, "ALL_L"));
  CHECK(lange_very_ample(2, 0, 2, 2, 3).status == Status::NotGuaranteed);
  CHECK(lange_very_ample(2, 1, 0, 1, 1).status == Status::VeryAmple);
  // threshold 3/3 - 1/3 + 0 = 2/3: ell = 1 passes, ell = 0 does not
  CHECK(lange_very_ample(3, 3, 0, 1, 1).status == Status::VeryAmple);
  CHECK(lange_very_ample(3, 3, 0, 1, 0).status == Status::NotGuaranteed);
  CHECK_THROWS_WITH_AS(lange_very_ample(1, 0, 2, 0, 5), "projective bundle requires rank >= 2",
                       DomainError);
}

TEST_CASE("lange_very_ample is monotone in ell and s1") {
  for (std::int64_t r = 2; r <= 4; ++r)
    for (std::int64_t d = -6; d <= 6; ++d)
      for (std::int64_t g = 0; g <= 3; ++g)
        for (std::int64_t s1 = -6; s1 <= 6; ++s1)
          for (std::int64_t ell = -4; ell <= 10; ++ell) {
            if (lange_very_ample(r, d, g, s1, ell).status != Status::VeryAmple) continue;
            CHECK(lange_very_ample(r, d, g, s1, ell + 1).status == Status::VeryAmple);
            CHECK(lange_very_ample(r, d, g, s1 + 1, ell).status == Status::VeryAmple);
          }
}

TEST_CASE("semistable_emptiness_ranges") {
  using Ranges = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(semistable_emptiness_ranges(2, -10, 2).ranges == Ranges{{1, 2}});
  CHECK(semistable_emptiness_ranges(3, -30, 2).ranges == Ranges{{1, 7}, {2, 17}});
  CHECK(semistable_emptiness_ranges(2, -4, 2).ranges == Ranges{{1, 0}});
  CHECK(semistable_emptiness_ranges(2, -10, 2).hypothesis_holds);
  // mu = -2 is not < 1 - 4 = -3
  const auto weak = semistable_emptiness_ranges(2, -4, 2);
  CHECK_FALSE(weak.hypothesis_holds);
  CHECK(weak.caveats.size() == 1);
  // 1 < 9/2 - 0 = 4.5 ... so e <= 4; strict inequality at an integer bound
  CHECK(semistable_emptiness_ranges(2, -9, 1).ranges == Ranges{{1, 4}});
  CHECK(semistable_emptiness_ranges(2, -8, 1).ranges == Ranges{{1, 3}});
}

TEST_CASE("general_expected_dim") {
  Verdict v = general_expected_dim(2, -9, 2, 3);
  CHECK(v.value == 1);
  CHECK(v.status == Status::EmptyOrExpectedDim);
  CHECK(assumes(v, "GENERIC_E"));
  CHECK(assumes(v, "GENERIC_M"));
  v = general_expected_dim(2, -9, 2, 2);
  CHECK(v.value == -2);
  CHECK(v.status == Status::Empty);
  CHECK_THROWS_WITH_AS(general_expected_dim(2, 0, 2, 2),
                       "degree too large for the complete-case theorem", DomainError);
}

TEST_CASE("general_expected_dim agrees with quot_line_dim + e - g") {
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t g = 0; g <= 4; ++g)
      for (std::int64_t d = -30; d <= r * (1 - g) - 2; ++d)
        for (std::int64_t e = 1; e <= 10; ++e)
          CHECK(*general_expected_dim(r, d, g, e).value ==
                *quot_line_dim(r, d, g, e).value + e - g);
}

TEST_CASE("incomplete_expected_dim") {
  Verdict v = incomplete_expected_dim(1, 2, 2);
  CHECK(v.value == 0);
  CHECK(v.status == Status::EmptyOrExpectedDim);
  CHECK(assumes(v, "GENERIC_W"));
  v = incomplete_expected_dim(2, 1, 3);
  CHECK(v.value == -2);
  CHECK(v.status == Status::Empty);
  CHECK(incomplete_expected_dim(3, 2, 4).value == 2);
}

TEST_CASE("general_nonempty") {
  CHECK(general_nonempty(2, -9, 2, 3).status == Status::Nonempty);
  CHECK(general_nonempty(2, -9, 2, 2).status == Status::NotGuaranteed);
  // max{0, 0 + 1*2/1} = 2
  CHECK(general_nonempty(1, 0, 0, 1).status == Status::NotGuaranteed);
  CHECK(general_nonempty(1, 0, 0, 2).status == Status::Nonempty);
  // e >= g fails even though the slope bound holds
  CHECK(general_nonempty(2, -20, 5, 4).status == Status::NotGuaranteed);
}

TEST_CASE("projection_dims") {
  CHECK(projection_dims(10, 7, 5, 4, 2, 1) == std::pair<std::int64_t, std::int64_t>{5, 6});
  // n = m and f = f' give d1 = d2 = 6 - (4 + 1 - 3 + 1)
  CHECK(projection_dims(6, 4, 4, 3, 1, 1) == std::pair<std::int64_t, std::int64_t>{3, 3});
  for (std::int64_t dim_b = 0; dim_b <= 12; ++dim_b)
    CHECK(projection_dims(dim_b, 7, 5, 4, 2, 0) ==
          std::pair<std::int64_t, std::int64_t>{dim_b, dim_b});
  CHECK_THROWS_WITH_AS(projection_dims(10, 4, 5, 4, 2, 1),
                       "index constraints 0 <= f <= e <= m+1 <= n+1 violated", DomainError);
  CHECK_THROWS_AS(projection_dims(10, 7, 5, 4, 2, 3), DomainError);
}

TEST_CASE("fiber_stratum") {
  Verdict v = fiber_stratum(3, 4, 7);
  CHECK(v.value == 9);
  CHECK(v.status == Status::Holds);
  CHECK(fiber_stratum(3, 4, 5).status == Status::Fails);
  v = fiber_stratum(2, 3, 4);
  CHECK(v.value == 4);
  CHECK(v.status == Status::Holds);
  CHECK_THROWS_WITH_AS(fiber_stratum(3, 3, 7), "example requires e >= r+1", DomainError);
}

TEST_CASE("conjectural_bound") {
  CHECK(conjectural_bound(2, 5, 1) == 2);
  CHECK(conjectural_bound(3, 4, 1) == 0);
  CHECK(conjectural_bound(2, 3, 1) == 0);
}

TEST_CASE("evaluate_criteria picks rows by available inputs") {
  CriteriaInput in;
  in.r = 2;
  in.d = -10;
  in.g = 2;
  in.e = 1;
  in.s1 = 0;
  const auto rows = evaluate_criteria(in);
  const auto find = [&](std::string_view name) {
    return std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.name == name; });
  };
  const auto seg = find("segre_emptiness");
  REQUIRE(seg != rows.end());
  REQUIRE(seg->verdict);
  CHECK(seg->verdict->status == Status::Empty);
  CHECK(find("lange_very_ample") == rows.end());
  CHECK(find("expected_dim_secant") == rows.end());
  CHECK(find("hirschowitz_bound[t=1]") != rows.end());
  CHECK(find("semistable_emptiness[t=1]") != rows.end());

  CriteriaInput rank_only;
  rank_only.r = 3;
  CHECK(evaluate_criteria(rank_only).empty());

  CriteriaInput bad = in;
  bad.d = 0;  // general_expected_dim needs n >= 0
  const auto rows2 = evaluate_criteria(bad);
  const auto ged = std::find_if(rows2.begin(), rows2.end(),
                                [](const auto& r) { return r.name == "general_expected_dim"; });
  REQUIRE(ged != rows2.end());
  CHECK_FALSE(ged->verdict);
  CHECK(ged->error == "degree too large for the complete-case theorem");
}
