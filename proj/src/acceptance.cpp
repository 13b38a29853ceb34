#include "secant/acceptance.hpp"

#include <cctype>
#include <chrono>
#include <cstdint>
#include <random>
#include <regex>
#include <sstream>

#include "secant/cli.hpp"
#include "secant/criteria.hpp"
#include "secant/power_series.hpp"
#include "secant/quot_enum.hpp"
#include "secant/symprod.hpp"

namespace secant::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Bounds and limits, pinned.
constexpr std::int64_t kGridMaxRank = 4;
constexpr std::int64_t kGridMaxAbsDeg = 10;
constexpr std::int64_t kGridMaxGenus = 4;
constexpr std::size_t kIntegralityOrder = 12;
constexpr double kNormalizationSeconds = 1.0;
constexpr double kOracleSeconds = 5.0;
constexpr std::size_t kRevertOrder = 32;
constexpr int kRevertSamples = 100;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Whole milliseconds, so no output line carries a decimal.
std::string fmt_seconds(double s) { return std::to_string(static_cast<long>(s * 1000.0)) + "ms"; }

ScrollParams params(std::int64_t r, std::int64_t d, std::int64_t m, std::int64_t g) {
  ScrollParams p;
  p.r = r;
  p.d = d;
  p.m = m;
  p.g = g;
  return p;
}

std::string describe(const ScrollParams& p) {
  std::ostringstream os;
  os << "(r=" << p.r << ",d=" << p.d << ",m=" << p.m << ",g=" << p.g << ")";
  return os.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Calls fn(params) over r<=4, |d|<=10, |m|<=10, g<=4; stops at the first
// failure and reports it.
template <typename Fn>
CriterionResult over_grid(int id, std::string title, Fn fn) {
  CriterionResult res{id, std::move(title), true, {}};
  std::size_t checked = 0;
  for (std::int64_t r = 1; r <= kGridMaxRank; ++r)
    for (std::int64_t d = -kGridMaxAbsDeg; d <= kGridMaxAbsDeg; ++d)
      for (std::int64_t m = -kGridMaxAbsDeg; m <= kGridMaxAbsDeg; ++m)
        for (std::int64_t g = 0; g <= kGridMaxGenus; ++g) {
          const ScrollParams p = params(r, d, m, g);
          std::string why = fn(p);
          ++checked;
          if (!why.empty()) {
            res.passed = false;
            res.detail = describe(p) + ": " + why;
            return res;
          }
        }
  res.detail = std::to_string(checked) + " parameter points";
  return res;
}

CriterionResult normalization() {
  const auto start = Clock::now();
  auto res = over_grid(1, "q^0 coefficient is 1", [](const ScrollParams& p) -> std::string {
    const Rational c = segre_generating_series(p, 0).coeff(0);
    return c == 1 ? "" : "got " + to_string(c);
  });
  const double elapsed = seconds_since(start);
  if (res.passed && elapsed >= kNormalizationSeconds) {
    res.passed = false;
    res.detail += ", too slow";
  }
  res.detail += " in " + fmt_seconds(elapsed);
  return res;
}

CriterionResult first_coefficient() {
  return over_grid(2, "q^1 coefficient is (-1)^r (rm - d)", [](const ScrollParams& p) -> std::string {
    const Rational c = segre_generating_series(p, 1).coeff(1);
    const std::int64_t sign = p.r % 2 == 0 ? 1 : -1;
    const Rational want = sign * (p.r * p.m - p.d);
    return c == want ? "" : "got " + to_string(c) + ", want " + to_string(want);
  });
}

CriterionResult double_points() {
  CriterionResult res{3, "double-point formula C(m-1,2) - g", true, {}};
  int checked = 0;
  for (std::int64_t m = 3; m <= 12; ++m)
    for (std::int64_t g = 0; g <= 4; ++g) {
      const std::int64_t want = binomial(m - 1, 2) - g;
      if (want < 0) continue;
      const CountReport rep = count_defective_secants(params(1, 0, m, g), 2, 2);
      ++checked;
      if (!rep.virtual_count || *rep.virtual_count != want) {
        res.passed = false;
        res.detail = "m=" + std::to_string(m) + " g=" + std::to_string(g) + ": want " +
                     std::to_string(want) + ", got " +
                     (rep.virtual_count ? to_string(*rep.virtual_count) : "none");
        return res;
      }
    }
  res.detail = std::to_string(checked) + " (m, g) pairs";
  return res;
}

CriterionResult trisecants() {
  CriterionResult res{4, "Berzolari trisecants C(m-2,3) - g(m-4)", true, {}};
  int checked = 0;
  for (std::int64_t m = 5; m <= 10; ++m)
    for (std::int64_t g = 0; g <= 3; ++g) {
      const std::int64_t want = binomial(m - 2, 3) - g * (m - 4);
      if (want < 0) continue;
      const CountReport rep = count_defective_secants(params(1, 0, m, g), 3, 4);
      ++checked;
      if (!rep.virtual_count || *rep.virtual_count != want) {
        res.passed = false;
        res.detail = "m=" + std::to_string(m) + " g=" + std::to_string(g) + ": want " +
                     std::to_string(want) + ", got " +
                     (rep.virtual_count ? to_string(*rep.virtual_count) : "none");
        return res;
      }
    }
  struct Pinned {
    std::int64_t m, g, count;
  };
  for (const Pinned& pin : {Pinned{5, 0, 1}, Pinned{6, 0, 4}, Pinned{6, 1, 2}}) {
    const CountReport rep = count_defective_secants(params(1, 0, pin.m, pin.g), 3, 4);
    if (!rep.virtual_count || *rep.virtual_count != pin.count) {
      res.passed = false;
      res.detail = "pinned value m=" + std::to_string(pin.m) + " g=" + std::to_string(pin.g) +
                   " is not " + std::to_string(pin.count);
      return res;
    }
  }
  res.detail = std::to_string(checked) + " (m, g) pairs + 3 pinned values";
  return res;
}

CriterionResult oracle_equivalence() {
  CriterionResult res{5, "rank-1 generating series equals symmetric-product oracle", true, {}};
  const auto start = Clock::now();
  int checked = 0;
  for (int e = 1; e <= 5; ++e)
    for (int g = 0; g <= 3; ++g)
      for (std::int64_t n = 0; n <= 12; ++n) {
        const Rational lhs = segre_integral(params(1, 0, n, g), e);
        const Rational rhs = sym_segre_integral(n, e, g);
        ++checked;
        if (lhs != rhs) {
          res.passed = false;
          res.detail = "N=" + std::to_string(n) + " e=" + std::to_string(e) + " g=" +
                       std::to_string(g) + ": " + to_string(lhs) + " vs " + to_string(rhs);
          return res;
        }
      }
  const double elapsed = seconds_since(start);
  res.detail = std::to_string(checked) + " (N, e, g) triples in " + fmt_seconds(elapsed);
  if (elapsed >= kOracleSeconds) {
    res.passed = false;
    res.detail += ", too slow";
  }
  return res;
}

CriterionResult integrality() {
  return over_grid(6, "series coefficients to order 12 are integers",
                   [](const ScrollParams& p) -> std::string {
                     const PowerSeries s = segre_generating_series(p, kIntegralityOrder);
                     for (std::size_t k = 0; k <= s.order(); ++k)
                       if (!is_integer(s.coeff(k)))
                         return "q^" + std::to_string(k) + " coefficient " + to_string(s.coeff(k));
                     return "";
                   });
}

CriterionResult series_algebra() {
  CriterionResult res{7, "series reversion round trip and Catalan check", true, {}};
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  const PowerSeries identity = PowerSeries::variable(kRevertOrder);
  for (int sample = 0; sample < kRevertSamples; ++sample) {
    std::vector<Rational> c(kRevertOrder + 1, Rational(0));
    for (std::size_t k = 1; k <= kRevertOrder; ++k) c[k] = make_rational(num(rng), den(rng));
    while (c[1] == 0) c[1] = make_rational(num(rng), den(rng));
    const PowerSeries f(std::move(c));
    if (ps_compose(f, ps_revert(f)) != identity) {
      res.passed = false;
      res.detail = "round trip failed on sample " + std::to_string(sample);
      return res;
    }
  }
  const PowerSeries g = ps_revert(PowerSeries::from_polynomial({0, -1, -1}, 6));
  const std::int64_t want[] = {0, -1, -1, -2, -5, -14, -42};
  for (std::size_t k = 0; k <= 6; ++k) {
    if (g.coeff(k) != want[k]) {
      res.passed = false;
      res.detail = "revert(-t-t^2) coefficient " + std::to_string(k) + " is " + to_string(g.coeff(k));
      return res;
    }
  }
  res.detail = std::to_string(kRevertSamples) + " random series at order 32; -1,-1,-2,-5,-14,-42";
  return res;
}

CriterionResult hirschowitz_delta() {
  CriterionResult res{8, "Hirschowitz delta in [0, r-1] and congruence mod r", true, {}};
  int checked = 0;
  for (std::int64_t r = 2; r <= 6; ++r)
    for (std::int64_t d = -20; d <= 20; ++d)
      for (std::int64_t g = 0; g <= 5; ++g)
        for (std::int64_t t = 1; t <= r - 1; ++t) {
          const std::int64_t bound = hirschowitz_bound(r, d, g, t);
          const std::int64_t delta = bound - t * (r - t) * (g - 1);
          const bool congruent = ((bound - t * d) % r) == 0;
          ++checked;
          if (delta < 0 || delta > r - 1 || !congruent) {
            res.passed = false;
            res.detail = "r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" +
                         std::to_string(g) + " t=" + std::to_string(t);
            return res;
          }
        }
  res.detail = std::to_string(checked) + " (r, d, g, t) tuples";
  return res;
}

CriterionResult expected_dim_identity() {
  CriterionResult res{9, "general expected dim = Quot line dim + e - g", true, {}};
  int checked = 0;
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t g = 0; g <= 4; ++g)
      for (std::int64_t d = -30; d <= r * (1 - g) - 2; ++d)
        for (std::int64_t e = 1; e <= 10; ++e) {
          const auto lhs = general_expected_dim(r, d, g, e).value;
          const auto rhs = quot_line_dim(r, d, g, e).value;
          ++checked;
          if (!lhs || !rhs || *lhs != *rhs + e - g) {
            res.passed = false;
            res.detail = "r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" +
                         std::to_string(g) + " e=" + std::to_string(e);
            return res;
          }
        }
  res.detail = std::to_string(checked) + " (r, d, g, e) tuples";
  return res;
}

CriterionResult segre_monotone() {
  CriterionResult res{10, "Segre-invariant emptiness is monotone in e", true, {}};
  int checked = 0;
  for (std::int64_t r = 1; r <= 6; ++r)
    for (std::int64_t d = -20; d <= 20; ++d)
      for (std::int64_t g = 0; g <= 5; ++g)
        for (std::int64_t e = 2; e <= 12; ++e)
          for (std::int64_t s1 = -30; s1 <= 30; ++s1) {
            ++checked;
            if (segre_emptiness(r, d, g, e, s1).status == Status::Empty &&
                segre_emptiness(r, d, g, e - 1, s1).status != Status::Empty) {
              res.passed = false;
              res.detail = "r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" +
                           std::to_string(g) + " e=" + std::to_string(e) + " s1=" +
                           std::to_string(s1);
              return res;
            }
          }
  res.detail = std::to_string(checked) + " (r, d, g, e, s1) tuples";
  return res;
}

bool has_float_token(const std::string& text) {
  static const std::regex float_token(R"(^[+-]?(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][+-]?\d+|nan|inf)$)",
                                      std::regex::icase);
  std::string token;
  auto flush = [&]() {
    const bool bad = !token.empty() && std::regex_match(token, float_token);
    token.clear();
    return bad;
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':' || c == '"' ||
        c == '[' || c == ']' || c == '{' || c == '}') {
      if (flush()) return true;
    } else {
      token += c;
    }
  }
  return flush();
}

CriterionResult cli_determinism() {
  CriterionResult res{11, "oracle subcommand: all PASS, deterministic, no floats", true, {}};
  const std::string base[] = {"oracle", "--genus", "2", "--length", "4", "--deg-m", "8"};
  for (const char* fmt : {"", "--json", "--csv"}) {
    std::vector<std::string> args(std::begin(base), std::end(base));
    if (*fmt) args.emplace_back(fmt);
    const cli::RunResult first = cli::main_entry(args);
    const cli::RunResult second = cli::main_entry(args);
    const std::string label = *fmt ? fmt : "plain";
    if (first.exit_code != cli::kExitOk) {
      res.passed = false;
      res.detail = label + ": exit code " + std::to_string(first.exit_code);
      return res;
    }
    if (first.out != second.out || first.err != second.err) {
      res.passed = false;
      res.detail = label + ": repeated runs differ";
      return res;
    }
    if (first.out.find("FAIL") != std::string::npos) {
      res.passed = false;
      res.detail = label + ": a row reports FAIL";
      return res;
    }
    if (has_float_token(first.out)) {
      res.passed = false;
      res.detail = label + ": output contains a floating-point token";
      return res;
    }
  }
  res.detail = "plain, json and csv outputs checked";
  return res;
}

}  // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return normalization();
    case 2: return first_coefficient();
    case 3: return double_points();
    case 4: return trisecants();
    case 5: return oracle_equivalence();
    case 6: return integrality();
    case 7: return series_algebra();
    case 8: return hirschowitz_delta();
    case 9: return expected_dim_identity();
    case 10: return segre_monotone();
    case 11: return cli_determinism();
    default: throw DomainError("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    try {
      out.push_back(run_criterion(id));
    } catch (const std::exception& err) {
      out.push_back({id, "criterion " + std::to_string(id), false,
                     std::string("exception: ") + err.what()});
    }
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << (r.id < 10 ? "0" : "") << r.id << ' ' << r.title
     << ": " << r.detail;
  return os.str();
}

}  // namespace secant::acceptance
