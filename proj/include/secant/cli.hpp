#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace secant::cli {

enum class Command { Count, Series, Criteria, Table, Oracle, Selftest };
enum class OutputFormat { Plain, Json, Csv };

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line or config file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive integer range; a plain value is the range [v, v].
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool is_single() const { return lo == hi; }
  bool operator==(const IntRange&) const = default;
};

/// Parameter names as they appear on the command line without the leading
/// dashes: rank, deg-e, deg-m, genus, length, defect, dim-v, s1, ell.
struct RunConfig {
  Command command = Command::Count;
  std::map<std::string, IntRange, std::less<>> params;
  OutputFormat output = OutputFormat::Plain;
  std::optional<std::int64_t> order;

  std::optional<std::int64_t> value(std::string_view name) const;
};

struct RunResult {
  std::string out;
  std::string err;
  int exit_code = kExitOk;
};

/// args excludes the program name; the first element is the command.
/// Throws UsageError.
RunConfig parse_args(std::span<const std::string> args);

RunResult run(const RunConfig& config);

/// parse_args + run, mapping usage errors to exit code 2.
RunResult main_entry(std::span<const std::string> args);

std::string usage();

}  // namespace secant::cli
