#include "secant/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secant/acceptance.hpp"
#include "secant/criteria.hpp"
#include "secant/quot_enum.hpp"
#include "secant/rational.hpp"
#include "secant/symprod.hpp"

namespace secant::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 9> kParamNames{
    "rank", "deg-e", "deg-m", "genus", "length", "defect", "dim-v", "s1", "ell"};

constexpr std::int64_t kOracleMaxGenus = 2;
constexpr std::int64_t kOracleMaxLength = 4;
constexpr std::int64_t kOracleMaxDegree = 8;

bool is_param(std::string_view name) {
  return std::find(kParamNames.begin(), kParamNames.end(), name) != kParamNames.end();
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw UsageError("malformed integer for " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

IntRange parse_range(std::string_view text, std::string_view what) {
  const auto sep = text.find("..");
  if (sep == std::string_view::npos) {
    const std::int64_t v = parse_int(text, what);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, sep), what), parse_int(text.substr(sep + 2), what)};
  if (r.lo > r.hi) throw UsageError("empty range for " + std::string(what));
  return r;
}

std::optional<Command> parse_command(std::string_view word) {
  if (word == "count") return Command::Count;
  if (word == "series") return Command::Series;
  if (word == "criteria") return Command::Criteria;
  if (word == "table") return Command::Table;
  if (word == "oracle") return Command::Oracle;
  if (word == "selftest") return Command::Selftest;
  return std::nullopt;
}

void load_config(const std::string& path, RunConfig& cfg, bool output_set, bool order_set) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + err.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a single JSON object");

  auto as_text = [](const Json& v, const std::string& key) -> std::string {
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_string()) return v.get<std::string>();
    throw UsageError("config key '" + key + "' must be an integer or a string");
  };

  for (const auto& [raw_key, value] : doc.items()) {
    std::string key = raw_key;
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (is_param(key)) {
      if (!cfg.params.contains(key)) cfg.params[key] = parse_range(as_text(value, key), key);
    } else if (key == "order") {
      if (!order_set) cfg.order = parse_int(as_text(value, key), key);
    } else if (key == "json" || key == "csv") {
      if (!value.is_boolean()) throw UsageError("config key '" + key + "' must be a boolean");
      if (!output_set && value.get<bool>())
        cfg.output = key == "json" ? OutputFormat::Json : OutputFormat::Csv;
    } else if (key == "output") {
      const std::string v = as_text(value, key);
      if (v != "plain" && v != "json" && v != "csv")
        throw UsageError("config key 'output' must be plain, json or csv");
      if (!output_set)
        cfg.output = v == "json" ? OutputFormat::Json
                     : v == "csv" ? OutputFormat::Csv
                                  : OutputFormat::Plain;
    } else {
      throw UsageError("unknown config key '" + raw_key + "'");
    }
  }
}

void require(const RunConfig& cfg, std::initializer_list<std::string_view> names) {
  for (auto name : names)
    if (!cfg.params.contains(name))
      throw UsageError("missing required parameter --" + std::string(name));
}

// ---------------------------------------------------------------------------
// rendering helpers

Json json_number(const Rational& q) {
  if (is_integer(q) && fits_int64(q.get_num())) return to_int64(q.get_num());
  return to_string(q);
}

Json json_number(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return to_string(z);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

ScrollParams scroll_params(std::int64_t r, std::int64_t d, std::int64_t m, std::int64_t g) {
  ScrollParams p;
  p.r = r;
  p.d = d;
  p.m = m;
  p.g = g;
  return p;
}

Json params_json(const ScrollParams& p) {
  Json j;
  j["r"] = p.r;
  j["d"] = p.d;
  j["m"] = p.m;
  j["g"] = p.g;
  return j;
}

constexpr std::string_view kCountCsvHeader =
    "r,d,m,g,e,n,raw_coefficient,virtual_count,expected_dim_zero,caveats";

std::string count_csv_row(const CountReport& rep) {
  std::ostringstream os;
  const auto& p = rep.params;
  os << p.r << ',' << p.d << ',' << p.m << ',' << p.g << ',' << rep.e << ',' << rep.n << ','
     << to_string(rep.raw_coefficient) << ','
     << (rep.virtual_count ? to_string(*rep.virtual_count) : std::string()) << ','
     << (rep.expected_dim_zero ? "true" : "false") << ',' << csv_field(join(rep.caveats, ";"));
  return os.str();
}

Json count_json(const CountReport& rep) {
  Json j;
  j["params"] = params_json(rep.params);
  j["e"] = rep.e;
  j["n"] = rep.n;
  j["raw_coefficient"] = json_number(rep.raw_coefficient);
  j["virtual_count"] = rep.virtual_count ? json_number(*rep.virtual_count) : Json(nullptr);
  j["expected_dim_zero"] = rep.expected_dim_zero;
  j["caveats"] = rep.caveats;
  return j;
}

// ---------------------------------------------------------------------------
// commands

RunResult run_count(const RunConfig& cfg) {
  const ScrollParams p = scroll_params(*cfg.value("rank"), *cfg.value("deg-e"),
                                       *cfg.value("deg-m"), *cfg.value("genus"));
  const CountReport rep = count_defective_secants(p, *cfg.value("length"), *cfg.value("dim-v") - 1);
  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "count";
      j.update(count_json(rep));
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCountCsvHeader << '\n' << count_csv_row(rep) << '\n';
      break;
    case OutputFormat::Plain:
      os << "count r=" << p.r << " d=" << p.d << " m=" << p.m << " g=" << p.g << " e=" << rep.e
         << " n=" << rep.n << '\n'
         << "raw_coefficient: " << to_string(rep.raw_coefficient) << '\n'
         << "virtual_count: " << (rep.virtual_count ? to_string(*rep.virtual_count) : "n/a") << '\n'
         << "expected_dim_zero: " << (rep.expected_dim_zero ? "true" : "false") << '\n'
         << "caveats: " << join(rep.caveats, " ") << '\n';
      break;
  }
  return {os.str(), {}, kExitOk};
}

RunResult run_series(const RunConfig& cfg) {
  const ScrollParams p = scroll_params(*cfg.value("rank"), *cfg.value("deg-e"),
                                       *cfg.value("deg-m"), *cfg.value("genus"));
  const std::int64_t order =
      cfg.order ? *cfg.order : *cfg.value("length") + static_cast<std::int64_t>(kGuardTerms);
  if (order < 0) throw DomainError("series order must be non-negative");
  const PowerSeries s = segre_generating_series(p, static_cast<std::size_t>(order));
  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "series";
      j["params"] = params_json(p);
      j["order"] = order;
      Json coeffs = Json::array();
      for (const auto& c : s.coeffs()) coeffs.push_back(json_number(c));
      j["coefficients"] = std::move(coeffs);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "k,coefficient\n";
      for (std::size_t k = 0; k <= s.order(); ++k) os << k << ',' << to_string(s.coeff(k)) << '\n';
      break;
    case OutputFormat::Plain:
      os << "series r=" << p.r << " d=" << p.d << " m=" << p.m << " g=" << p.g
         << " order=" << order << '\n';
      for (std::size_t k = 0; k <= s.order(); ++k)
        os << "q^" << k << ": " << to_string(s.coeff(k)) << '\n';
      break;
  }
  return {os.str(), {}, kExitOk};
}

RunResult run_criteria(const RunConfig& cfg) {
  CriteriaInput in;
  in.r = cfg.value("rank");
  in.d = cfg.value("deg-e");
  in.g = cfg.value("genus");
  in.e = cfg.value("length");
  in.f = cfg.value("defect");
  if (auto dim_v = cfg.value("dim-v")) in.n = *dim_v - 1;
  in.s1 = cfg.value("s1");
  in.ell = cfg.value("ell");
  const auto rows = evaluate_criteria(in);

  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "criteria";
      Json list = Json::array();
      for (const auto& row : rows) {
        Json item;
        item["name"] = row.name;
        if (row.verdict) {
          item["status"] = std::string(to_string(row.verdict->status));
          item["value"] = row.verdict->value ? Json(*row.verdict->value) : Json(nullptr);
          item["formula_id"] = row.verdict->formula_id;
          item["assumptions"] = row.verdict->assumptions;
        } else {
          item["error"] = row.error;
        }
        list.push_back(std::move(item));
      }
      j["criteria"] = std::move(list);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "name,status,value,formula_id,assumptions,error\n";
      for (const auto& row : rows) {
        os << csv_field(row.name) << ',';
        if (row.verdict) {
          os << to_string(row.verdict->status) << ','
             << (row.verdict->value ? std::to_string(*row.verdict->value) : std::string()) << ','
             << csv_field(row.verdict->formula_id) << ','
             << csv_field(join(row.verdict->assumptions, ";")) << ",\n";
        } else {
          os << ",,,," << csv_field(row.error) << '\n';
        }
      }
      break;
    case OutputFormat::Plain:
      for (const auto& row : rows) {
        os << row.name << ": ";
        if (!row.verdict) {
          os << "n/a (" << row.error << ")\n";
          continue;
        }
        os << to_string(row.verdict->status);
        if (row.verdict->value) os << " value=" << *row.verdict->value;
        os << " formula=" << row.verdict->formula_id;
        if (!row.verdict->assumptions.empty())
          os << " assumptions=" << join(row.verdict->assumptions, ",");
        os << '\n';
      }
      break;
  }
  return {os.str(), {}, kExitOk};
}

RunResult run_table(const RunConfig& cfg) {
  const auto range = [&](std::string_view name) { return cfg.params.find(name)->second; };
  const IntRange rr = range("rank"), dr = range("deg-e"), mr = range("deg-m"),
                 gr = range("genus"), er = range("length"), vr = range("dim-v");

  struct Row {
    std::optional<CountReport> report;
    ScrollParams params;
    std::int64_t e, n;
    std::string error;
  };
  std::vector<Row> rows;
  bool failed = false;
  // Lexicographic in (rank, deg-e, deg-m, genus, length, dim-v).
  for (auto r = rr.lo; r <= rr.hi; ++r)
    for (auto d = dr.lo; d <= dr.hi; ++d)
      for (auto m = mr.lo; m <= mr.hi; ++m)
        for (auto g = gr.lo; g <= gr.hi; ++g)
          for (auto e = er.lo; e <= er.hi; ++e)
            for (auto v = vr.lo; v <= vr.hi; ++v) {
              Row row{std::nullopt, scroll_params(r, d, m, g), e, v - 1, {}};
              try {
                row.report = count_defective_secants(row.params, e, v - 1);
              } catch (const DomainError& err) {
                row.error = err.what();
                failed = true;
              }
              rows.push_back(std::move(row));
            }

  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "table";
      Json list = Json::array();
      for (const auto& row : rows) {
        Json item;
        if (row.report) {
          item = count_json(*row.report);
        } else {
          item["params"] = params_json(row.params);
          item["e"] = row.e;
          item["n"] = row.n;
          item["error"] = row.error;
        }
        list.push_back(std::move(item));
      }
      j["rows"] = std::move(list);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
    case OutputFormat::Plain:
      os << kCountCsvHeader << ",error\n";
      for (const auto& row : rows) {
        if (row.report) {
          os << count_csv_row(*row.report) << ",\n";
        } else {
          const auto& p = row.params;
          os << p.r << ',' << p.d << ',' << p.m << ',' << p.g << ',' << row.e << ',' << row.n
             << ",,,,," << csv_field(row.error) << '\n';
        }
      }
      break;
  }
  return {os.str(), {}, failed ? kExitFailure : kExitOk};
}

RunResult run_oracle(const RunConfig& cfg) {
  if (auto r = cfg.value("rank"); r && *r != 1)
    throw DomainError("the symmetric-product oracle covers rank 1 only");
  if (auto d = cfg.value("deg-e"); d && *d != 0)
    throw DomainError("the symmetric-product oracle compares against E trivial (deg-e 0)");
  const std::int64_t max_g = cfg.value("genus").value_or(kOracleMaxGenus);
  const std::int64_t max_e = cfg.value("length").value_or(kOracleMaxLength);
  const std::int64_t max_n = cfg.value("deg-m").value_or(kOracleMaxDegree);
  if (max_g < 0 || max_e < 1 || max_n < 0)
    throw DomainError("oracle bounds need genus >= 0, length >= 1, deg-m >= 0");

  struct Row {
    std::int64_t N, g, e;
    Rational lhs, rhs;
    bool pass;
  };
  std::vector<Row> rows;
  std::size_t passed = 0;
  for (std::int64_t g = 0; g <= max_g; ++g)
    for (std::int64_t e = 1; e <= max_e; ++e)
      for (std::int64_t n = 0; n <= max_n; ++n) {
        const Rational lhs = segre_integral(scroll_params(1, 0, n, g), e);
        const Rational rhs = sym_segre_integral(n, static_cast<int>(e), static_cast<int>(g));
        rows.push_back({n, g, e, lhs, rhs, lhs == rhs});
        if (lhs == rhs) ++passed;
      }
  const bool ok = passed == rows.size();

  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "oracle";
      Json list = Json::array();
      for (const auto& row : rows) {
        Json item;
        item["N"] = row.N;
        item["g"] = row.g;
        item["e"] = row.e;
        item["quot_enum"] = json_number(row.lhs);
        item["symprod"] = json_number(row.rhs);
        item["status"] = row.pass ? "PASS" : "FAIL";
        list.push_back(std::move(item));
      }
      j["rows"] = std::move(list);
      j["passed"] = passed;
      j["total"] = rows.size();
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "N,g,e,quot_enum,symprod,status\n";
      for (const auto& row : rows)
        os << row.N << ',' << row.g << ',' << row.e << ',' << to_string(row.lhs) << ','
           << to_string(row.rhs) << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
      break;
    case OutputFormat::Plain:
      os << "N g e quot_enum symprod status\n";
      for (const auto& row : rows)
        os << row.N << ' ' << row.g << ' ' << row.e << ' ' << to_string(row.lhs) << ' '
           << to_string(row.rhs) << ' ' << (row.pass ? "PASS" : "FAIL") << '\n';
      os << "oracle: " << passed << '/' << rows.size() << (ok ? " PASS" : " FAIL") << '\n';
      break;
  }
  return {os.str(), {}, ok ? kExitOk : kExitFailure};
}

RunResult run_selftest(const RunConfig& cfg) {
  const auto results = acceptance::run_all();
  bool ok = true;
  std::ostringstream os;
  if (cfg.output == OutputFormat::Json) {
    Json list = Json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    Json j;
    j["command"] = "selftest";
    j["criteria"] = std::move(list);
    j["passed"] = ok;
    os << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      ok = ok && r.passed;
      os << acceptance::format_line(r) << '\n';
    }
  }
  return {os.str(), {}, ok ? kExitOk : kExitFailure};
}

}  // namespace

std::optional<std::int64_t> RunConfig::value(std::string_view name) const {
  const auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second.lo;
}

std::string usage() {
  return "usage: secantctl <count|series|criteria|table|oracle|selftest> [options]\n"
         "  --rank R --deg-e D --deg-m M --genus G   bundle E (rank R, degree D), twist degree M\n"
         "  --length E --defect F --dim-v K         secant length, defect, dim V = K\n"
         "  --s1 S --ell L                          Segre invariant s1(E), twist degree for P(E)\n"
         "  --order T                               series truncation order (default length+2)\n"
         "  --json | --csv                          output format (default plain text)\n"
         "  --config PATH                           flat JSON object of defaults\n"
         "table accepts ranges LO..HI; oracle reads --genus/--length/--deg-m as upper bounds.\n";
}

RunConfig parse_args(std::span<const std::string> args) {
  if (args.empty()) throw UsageError("missing command");
  const auto command = parse_command(args.front());
  if (!command) throw UsageError("unknown command '" + args.front() + "'");

  CLI::App app{"secantctl", "secantctl"};
  app.set_help_flag();
  app.allow_extras(false);
  std::map<std::string, std::string, std::less<>> raw;
  for (auto name : kParamNames) app.add_option("--" + std::string(name), raw[std::string(name)]);
  std::string order_text;
  std::string config_path;
  bool json = false;
  bool csv = false;
  app.add_option("--order", order_text);
  app.add_option("--config", config_path);
  app.add_flag("--json", json);
  app.add_flag("--csv", csv);

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  RunConfig cfg;
  cfg.command = *command;
  if (json && csv) throw UsageError("--json and --csv are mutually exclusive");
  if (json) cfg.output = OutputFormat::Json;
  if (csv) cfg.output = OutputFormat::Csv;
  for (auto name : kParamNames) {
    const std::string flag = "--" + std::string(name);
    if (app.count(flag) > 0) cfg.params[std::string(name)] = parse_range(raw[std::string(name)], flag);
  }
  if (app.count("--order") > 0) cfg.order = parse_int(order_text, "--order");
  if (app.count("--config") > 0)
    load_config(config_path, cfg, json || csv, app.count("--order") > 0);

  if (cfg.command != Command::Table) {
    for (const auto& [name, range] : cfg.params)
      if (!range.is_single())
        throw UsageError("ranges are only allowed for the table command (--" + name + ")");
  }
  if (cfg.order && *cfg.order < 0) throw UsageError("--order must be non-negative");

  switch (cfg.command) {
    case Command::Count:
    case Command::Table:
      require(cfg, {"rank", "deg-e", "deg-m", "genus", "length", "dim-v"});
      break;
    case Command::Series:
      require(cfg, {"rank", "deg-e", "deg-m", "genus"});
      if (!cfg.order && !cfg.value("length"))
        throw UsageError("series needs --order or --length");
      break;
    case Command::Criteria:
      require(cfg, {"rank"});
      break;
    case Command::Oracle:
    case Command::Selftest:
      break;
  }
  return cfg;
}

RunResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::Count: return run_count(config);
      case Command::Series: return run_series(config);
      case Command::Criteria: return run_criteria(config);
      case Command::Table: return run_table(config);
      case Command::Oracle: return run_oracle(config);
      case Command::Selftest: return run_selftest(config);
    }
  } catch (const DomainError& err) {
    return {{}, std::string("error: ") + err.what() + '\n', kExitFailure};
  } catch (const InternalError& err) {
    return {{}, std::string("internal error: ") + err.what() + '\n', kExitFailure};
  }
  return {{}, "error: unhandled command\n", kExitFailure};
}

RunResult main_entry(std::span<const std::string> args) {
  try {
    return run(parse_args(args));
  } catch (const UsageError& err) {
    return {{}, std::string("error: ") + err.what() + '\n' + usage(), kExitUsage};
  }
}

}  // namespace secant::cli
