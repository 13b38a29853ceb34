#include <doctest.h>

#include <random>
#include <sstream>

#include "secant/power_series.hpp"

using namespace secant;

namespace {

PowerSeries poly(std::initializer_list<Rational> c, std::size_t order) {
  return PowerSeries::from_polynomial(c, order);
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit = false) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  while (unit && c[0] == 0) c[0] = make_rational(num(rng), den(rng));
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(floor_of(q) == -2);
  CHECK(ceil_of(q) == -1);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("series carry their truncation order") {
  const PowerSeries a = poly({1, 2, 3}, 4);
  CHECK(a.order() == 4);
  CHECK(a.coeffs().size() == 5);
  CHECK(a.coeff(4) == 0);
  CHECK(poly({1, 2, 3}, 1) == PowerSeries(std::vector<Rational>{1, 2}));
  CHECK(poly({1}, 2) != poly({1}, 3));
  CHECK_THROWS_WITH_AS(a.coeff(5), "coefficient beyond truncation order", DomainError);
  CHECK_THROWS_AS(a.truncated(5), DomainError);
}

TEST_CASE("ps_add") {
  CHECK(ps_add(poly({1, 1}, 1), poly({1, -1}, 1)) == poly({2}, 1));
  CHECK(ps_add(poly({1, 0, 1}, 2), PowerSeries(2)) == poly({1, 0, 1}, 2));
  const PowerSeries s = ps_add(poly({1, 1, 1, 1}, 3), poly({1, 1, 1}, 2));
  CHECK(s.order() == 2);
  CHECK(s == poly({2, 2, 2}, 2));
}

TEST_CASE("ps_mul") {
  CHECK(ps_mul(poly({1, 1}, 2), poly({1, -1}, 2)) == poly({1, 0, -1}, 2));
  CHECK(ps_mul(poly({1, 1}, 2), poly({1, 1}, 2)) == poly({1, 2, 1}, 2));
  // B(t) for r = 1: (1+t)^2 / (1+2t)
  CHECK(ps_mul(poly({1, 2, 1}, 3), poly({1, -2, 4, -8}, 3)) == poly({1, 0, 1, -2}, 3));
  CHECK(ps_mul(poly({1, 1}, 5), poly({1, 1}, 2)).order() == 2);
}

TEST_CASE("ps_inv") {
  CHECK(ps_inv(poly({1, 2}, 3)) == poly({1, -2, 4, -8}, 3));
  CHECK(ps_inv(poly({1}, 3)) == poly({1}, 3));
  CHECK(ps_inv(poly({2}, 0)) == poly({make_rational(1, 2)}, 0));
  CHECK_THROWS_WITH_AS(ps_inv(poly({0, 1}, 3)), "not invertible", DomainError);
}

TEST_CASE("ps_pow") {
  CHECK(ps_pow(poly({1, 1}, 3), 3) == poly({1, 3, 3, 1}, 3));
  CHECK(ps_pow(poly({1, 1}, 3), 0) == poly({1}, 3));
  CHECK(ps_pow(poly({1, 2}, 2), -1) == poly({1, -2, 4}, 2));
  CHECK(ps_pow(poly({1, 2}, 2), -1) == ps_inv(poly({1, 2}, 2)));
  CHECK(ps_pow(poly({0, 1}, 3), 2) == poly({0, 0, 1}, 3));
  CHECK_THROWS_WITH_AS(ps_pow(poly({0, 1}, 3), -2), "not invertible", DomainError);
}

TEST_CASE("ps_compose") {
  CHECK(ps_compose(poly({1, 1}, 1), poly({0, -1}, 1)) == poly({1, -1}, 1));
  CHECK(ps_compose(poly({0, 0, 1}, 3), poly({0, 1, 1}, 3)) == poly({0, 0, 1, 2}, 3));
  const PowerSeries f = poly({0, -1, -1}, 8);
  CHECK(ps_compose(ps_revert(f), f) == PowerSeries::variable(8));
  CHECK_THROWS_WITH_AS(ps_compose(poly({1, 1}, 2), poly({1, 1}, 2)),
                       "composition requires g(0)=0", DomainError);
}

TEST_CASE("ps_revert") {
  CHECK(ps_revert(poly({0, 1}, 6)) == PowerSeries::variable(6));
  // t + t^2 = -q solved degree by degree: signed Catalan numbers.
  CHECK(ps_revert(poly({0, -1, -1}, 5)) == poly({0, -1, -1, -2, -5, -14}, 5));
  CHECK(ps_revert(poly({0, 2}, 4)) == poly({0, make_rational(1, 2)}, 4));
  CHECK_THROWS_WITH_AS(ps_revert(poly({1, 1}, 3)), "not reversible", DomainError);
  CHECK_THROWS_WITH_AS(ps_revert(poly({0, 0, 1}, 3)), "not reversible", DomainError);
  CHECK_THROWS_AS(ps_revert(poly({0}, 0)), DomainError);
}

TEST_CASE("ps_coeff") {
  CHECK(ps_coeff(ps_pow(poly({1, 1}, 3), 3), 2) == 3);
  CHECK(ps_coeff(poly({1}, 0), 0) == 1);
  CHECK(ps_coeff(ps_revert(poly({0, -1, -1}, 5)), 4) == -5);
  CHECK_THROWS_WITH_AS(ps_coeff(poly({1}, 2), 3), "coefficient beyond truncation order",
                       DomainError);
  CHECK_THROWS_AS(ps_coeff(poly({1}, 2), -1), DomainError);
}

TEST_CASE("printing") {
  std::ostringstream os;
  os << poly({1, -2, make_rational(1, 3)}, 3);
  CHECK(os.str() == "1 - 2*t + 1/3*t^2 + O(t^4)");
}

TEST_CASE("ring axioms on random rational series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial % 9;
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PowerSeries(order));
  }
}

TEST_CASE("inverse and power laws") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = 1 + trial % 8;
    const auto a = random_series(rng, order, true);
    CHECK(a * ps_inv(a) == PowerSeries::constant(1, order));
    for (long j = -3; j <= 3; ++j)
      for (long k = -3; k <= 3; ++k) CHECK(ps_pow(a, j + k) == ps_pow(a, j) * ps_pow(a, k));
  }
}

TEST_CASE("reversion is a two-sided compositional inverse") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = 1 + trial % 12;
    auto f = random_series(rng, order);
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    c[0] = 0;
    if (c[1] == 0) c[1] = 3;
    f = PowerSeries(std::move(c));
    const auto g = ps_revert(f);
    CHECK(ps_compose(f, g) == PowerSeries::variable(order));
    CHECK(ps_compose(g, f) == PowerSeries::variable(order));
  }
}
