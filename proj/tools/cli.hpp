#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace svbell::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kInvalidArguments = 2,
  kNumericalFailure = 3,
};

struct IntRange {
  int first = 0;
  int last = 0;
};

struct RealRange {
  double first = 0.0;
  double last = 0.0;
  double step = 1.0;
};

/// Fully resolved options of one invocation.
struct RunConfig {
  std::string command;
  std::optional<int> N;
  std::optional<double> gamma;
  double eta = 1.0;
  std::optional<int> L;
  std::optional<IntRange> lRange;
  std::optional<RealRange> etaRange;
  std::optional<RealRange> gammaRange;
  double theta = 0.0;
  double mass = 0.99;
  int cap = 60;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 42;
  int oracleMaxN = 8;
  std::int64_t samples = 200000;
};

using Cell = std::variant<std::int64_t, double, std::string>;

/// Output table with "# key=value" metadata; serialized as CSV or JSON.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

IntRange parse_int_range(const std::string& text);
RealRange parse_real_range(const std::string& text);
/// Grid points first, first + step, ..., clamped at last.
std::vector<double> expand(const RealRange& range);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

Table cmd_dist(const RunConfig& config);
Table cmd_sweep_settings(const RunConfig& config);
Table cmd_sweep_eta(const RunConfig& config);
Table cmd_heatmap(const RunConfig& config);

struct VerifyOutcome {
  Table report;
  bool passed = true;
};
VerifyOutcome cmd_verify(const RunConfig& config);

/// Parses argv (without the program name), dispatches and writes the output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svbell::cli
