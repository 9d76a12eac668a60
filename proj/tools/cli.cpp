#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "svbell/chain.hpp"
#include "svbell/errors.hpp"
#include "svbell/loss.hpp"
#include "svbell/parallel.hpp"
#include "svbell/singlet.hpp"
#include "svbell/sv.hpp"

namespace svbell::cli {
namespace {

constexpr double kGuardMass = 0.999;
constexpr double kGuardTolerance = 1e-3;

std::string format_real(double value) { return fmt::format("{}", value); }

std::string format_range(const std::optional<IntRange>& range) {
  return range ? fmt::format("{}:{}", range->first, range->last) : "none";
}

std::string format_range(const std::optional<RealRange>& range) {
  return range ? fmt::format("{}:{}:{}", range->first, range->last, range->step) : "none";
}

template <typename T>
std::string format_optional(const std::optional<T>& value) {
  return value ? fmt::format("{}", *value) : "none";
}

std::vector<std::pair<std::string, std::string>> config_metadata(const RunConfig& config) {
  return {
      {"command", config.command},
      {"N", format_optional(config.N)},
      {"gamma", format_optional(config.gamma)},
      {"eta", format_real(config.eta)},
      {"L", format_optional(config.L)},
      {"L_range", format_range(config.lRange)},
      {"eta_range", format_range(config.etaRange)},
      {"gamma_range", format_range(config.gammaRange)},
      {"theta", format_real(config.theta)},
      {"mass", format_real(config.mass)},
      {"cap", fmt::format("{}", config.cap)},
      {"seed", fmt::format("{}", config.seed)},
  };
}

// Either a fixed singlet component or a truncated squeezed vacuum.
struct Source {
  std::optional<int> N;
  std::optional<SVSpec> sv;
};

SVSpec make_sv_spec(double gamma, const RunConfig& config) {
  SVSpec spec{gamma, config.mass, config.cap};
  spec.validate();
  return spec;
}

Source resolve_source(const RunConfig& config) {
  if (config.N.has_value() == config.gamma.has_value()) {
    throw InvalidArgument("give exactly one of --N or --gamma");
  }
  if (config.N) {
    if (*config.N < 0 || *config.N > kMaxPhotonNumber) {
      throw InvalidArgument(fmt::format("--N must lie in [0, {}]", kMaxPhotonNumber));
    }
    return {config.N, std::nullopt};
  }
  return {std::nullopt, make_sv_spec(*config.gamma, config)};
}

std::vector<int> settings_grid(const RunConfig& config) {
  if (config.L.has_value() == config.lRange.has_value()) {
    throw InvalidArgument("give exactly one of --L or --L-range");
  }
  const IntRange range = config.lRange ? *config.lRange : IntRange{*config.L, *config.L};
  if (range.first < 2 || range.last < range.first) {
    throw InvalidArgument("settings must satisfy 2 <= first <= last");
  }
  std::vector<int> grid;
  for (int L = range.first; L <= range.last; ++L) grid.push_back(L);
  return grid;
}

BellBreakdown evaluate(const Source& source, int L, double eta) {
  const ChainSpec chain = make_chain(L);
  const LossSpec loss(eta);
  if (source.N) return bell_fixed_N(*source.N, chain, loss);
  return bell_sv(chain, *source.sv, loss);
}

// Re-evaluates an SV point at the guard mass; nullopt when the guard cannot be computed.
std::optional<double> guard_delta(const SVSpec& spec, int L, double eta, double bell) {
  SVSpec tighter = spec;
  tighter.massThreshold = kGuardMass;
  try {
    return std::abs(bell_sv(make_chain(L), tighter, LossSpec(eta)).bell - bell);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

struct GuardSummary {
  double maxDelta = 0.0;
  bool available = true;

  void add(const std::optional<double>& delta) {
    if (!delta) {
      available = false;
      return;
    }
    maxDelta = std::max(maxDelta, *delta);
  }

  void write(Table& table) const {
    table.metadata.emplace_back("guard_mass", format_real(kGuardMass));
    if (!available) {
      table.metadata.emplace_back("guard", "unavailable");
      return;
    }
    table.metadata.emplace_back("guard_max_delta", format_real(maxDelta));
    table.metadata.emplace_back("guard_flagged", maxDelta > kGuardTolerance ? "true" : "false");
  }
};

struct PointResult {
  BellBreakdown breakdown;
  std::optional<double> guard;
};

void write_truncation(Table& table, const Source& source) {
  if (source.N) {
    table.metadata.emplace_back("n_max", fmt::format("{}", *source.N));
    table.metadata.emplace_back("truncation_mass", "1");
  } else {
    const int nMax = n_max_for(*source.sv);
    double mass = 0.0;
    for (int N = 0; N <= nMax; ++N) mass += lambda_sq(N, source.sv->gamma);
    table.metadata.emplace_back("n_max", fmt::format("{}", nMax));
    table.metadata.emplace_back("truncation_mass", format_real(mass));
  }
}

void check_efficiencies(const std::vector<double>& etas) {
  for (double eta : etas) [[maybe_unused]] const LossSpec checked(eta);
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (value.find_first_of(",\"\n") == std::string::npos) return value;
          std::string quoted = "\"";
          for (char ch : value) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return quoted + "\"";
        } else {
          return fmt::format("{}", value);
        }
      },
      cell);
}

}  // namespace

IntRange parse_int_range(const std::string& text) {
  int first = 0;
  int last = 0;
  char colon = 0;
  std::istringstream in(text);
  if (!(in >> first >> colon >> last) || colon != ':' || !in.eof()) {
    throw InvalidArgument("integer range must look like a:b, got '" + text + "'");
  }
  return {first, last};
}

RealRange parse_real_range(const std::string& text) {
  RealRange range;
  char colon1 = 0;
  char colon2 = 0;
  std::istringstream in(text);
  if (!(in >> range.first >> colon1 >> range.last >> colon2 >> range.step) || colon1 != ':' ||
      colon2 != ':' || !in.eof()) {
    throw InvalidArgument("range must look like a:b:step, got '" + text + "'");
  }
  if (!(range.step > 0.0) || range.last < range.first) {
    throw InvalidArgument("range needs step > 0 and a <= b");
  }
  return range;
}

std::vector<double> expand(const RealRange& range) {
  const auto count = static_cast<std::size_t>(
      std::floor((range.last - range.first) / range.step + 1e-9)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::min(range.first + static_cast<double>(i) * range.step, range.last);
  }
  return values;
}

std::string to_csv(const Table& table) {
  std::string text;
  for (const auto& [key, value] : table.metadata) text += fmt::format("# {}={}\n", key, value);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    text += (c ? "," : "") + table.columns[c];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) text += (c ? "," : "") + csv_cell(row[c]);
    text += '\n';
  }
  return text;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    for (const auto& cell : row) std::visit([&](const auto& v) { entry.push_back(v); }, cell);
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

Table cmd_dist(const RunConfig& config) {
  const Source source = resolve_source(config);
  const Angle theta{config.theta};
  const LossSpec loss(config.eta);
  const JointCountDistribution dist =
      source.N ? binomial_thin(joint_distribution(*source.N, theta), loss)
               : sv_mixture(theta, *source.sv, loss);

  Table table;
  table.metadata = config_metadata(config);
  write_truncation(table, source);
  table.metadata.emplace_back("distribution_mass", format_real(dist.mass()));
  table.columns = {"n", "m", "p"};
  for (int n = 0; n <= dist.maxCount(); ++n) {
    for (int m = 0; m <= dist.maxCount(); ++m) {
      table.rows.push_back({std::int64_t{n}, std::int64_t{m}, dist(n, m)});
    }
  }
  return table;
}

Table cmd_sweep_settings(const RunConfig& config) {
  const Source source = resolve_source(config);
  const std::vector<int> grid = settings_grid(config);
  const double eta = LossSpec(config.eta).eta();

  std::vector<PointResult> results(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    results[i].breakdown = evaluate(source, grid[i], eta);
    if (source.sv) results[i].guard = guard_delta(*source.sv, grid[i], eta, results[i].breakdown.bell);
  });

  Table table;
  table.metadata = config_metadata(config);
  write_truncation(table, source);
  if (source.sv) {
    GuardSummary guard;
    for (const auto& r : results) guard.add(r.guard);
    guard.write(table);
  }
  table.columns = {"L", "lhs", "rhs", "bell"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& b = results[i].breakdown;
    table.rows.push_back({std::int64_t{grid[i]}, b.lhs, b.rhs, b.bell});
  }
  return table;
}

Table cmd_sweep_eta(const RunConfig& config) {
  const Source source = resolve_source(config);
  const std::vector<int> settings = settings_grid(config);
  if (!config.etaRange) throw InvalidArgument("--eta-range is required");
  const std::vector<double> etas = expand(*config.etaRange);
  check_efficiencies(etas);

  const std::size_t count = settings.size() * etas.size();
  std::vector<PointResult> results(count);
  parallel_for(count, [&](std::size_t i) {
    const int L = settings[i / etas.size()];
    const double eta = etas[i % etas.size()];
    results[i].breakdown = evaluate(source, L, eta);
    if (source.sv) results[i].guard = guard_delta(*source.sv, L, eta, results[i].breakdown.bell);
  });

  Table table;
  table.metadata = config_metadata(config);
  write_truncation(table, source);
  if (source.sv) {
    GuardSummary guard;
    for (const auto& r : results) guard.add(r.guard);
    guard.write(table);
  }
  table.columns = {"L", "eta", "bell"};
  for (std::size_t i = 0; i < count; ++i) {
    table.rows.push_back({std::int64_t{settings[i / etas.size()]}, etas[i % etas.size()],
                          results[i].breakdown.bell});
  }
  return table;
}

Table cmd_heatmap(const RunConfig& config) {
  if (!config.gammaRange || !config.etaRange) {
    throw InvalidArgument("--gamma-range and --eta-range are required");
  }
  const int L = config.L.value_or(2);
  make_chain(L);
  const std::vector<double> gammas = expand(*config.gammaRange);
  const std::vector<double> etas = expand(*config.etaRange);
  check_efficiencies(etas);
  std::vector<SVSpec> specs;
  for (double gamma : gammas) specs.push_back(make_sv_spec(gamma, config));

  const std::size_t count = gammas.size() * etas.size();
  std::vector<PointResult> results(count);
  parallel_for(count, [&](std::size_t i) {
    const SVSpec& spec = specs[i / etas.size()];
    const double eta = etas[i % etas.size()];
    results[i].breakdown = bell_sv(make_chain(L), spec, LossSpec(eta));
    results[i].guard = guard_delta(spec, L, eta, results[i].breakdown.bell);
  });

  Table table;
  table.metadata = config_metadata(config);
  table.metadata.emplace_back("L_resolved", fmt::format("{}", L));
  std::string truncation;
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    const auto& b = results[g * etas.size()].breakdown;
    truncation += fmt::format("{}{}:{}:{}", g ? ";" : "", gammas[g], b.nMax, b.mass);
  }
  table.metadata.emplace_back("truncation_gamma_nmax_mass", truncation);
  GuardSummary guard;
  for (const auto& r : results) guard.add(r.guard);
  guard.write(table);
  table.columns = {"gamma", "eta", "bell"};
  for (std::size_t i = 0; i < count; ++i) {
    table.rows.push_back(
        {gammas[i / etas.size()], etas[i % etas.size()], results[i].breakdown.bell});
  }
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon-number chained Bell tests on the four-mode squeezed vacuum"};
  app.require_subcommand(1);

  RunConfig config;
  std::string lRange;
  std::string etaRange;
  std::string gammaRange;
  int N = 0;
  double gamma = 0.0;
  int L = 0;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out, "Output path (default stdout)");
    sub->add_option("--seed", config.seed, "Random seed");
  };
  auto add_truncation = [&](CLI::App* sub) {
    sub->add_option("--mass", config.mass, "Truncation mass threshold");
    sub->add_option("--cap", config.cap, "Photon-number cap for truncation");
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--N", N, "Photons per beam of a single singlet component");
    sub->add_option("--gamma", gamma, "Squeezed-vacuum gain");
  };

  CLI::App* dist = app.add_subcommand("dist", "Joint photon-count distribution");
  add_source(dist);
  dist->add_option("--theta", config.theta, "Relative polarizer angle in radians");
  dist->add_option("--eta", config.eta, "Detection efficiency");
  add_truncation(dist);
  add_output(dist);

  CLI::App* sweepSettings = app.add_subcommand("sweep-settings", "Bell value versus L");
  add_source(sweepSettings);
  sweepSettings->add_option("--L", L, "Number of settings per side");
  sweepSettings->add_option("--L-range", lRange, "Inclusive range a:b");
  sweepSettings->add_option("--eta", config.eta, "Detection efficiency");
  add_truncation(sweepSettings);
  add_output(sweepSettings);

  CLI::App* sweepEta = app.add_subcommand("sweep-eta", "Bell value versus efficiency");
  add_source(sweepEta);
  sweepEta->add_option("--L", L, "Number of settings per side");
  sweepEta->add_option("--L-range", lRange, "Inclusive range a:b");
  sweepEta->add_option("--eta-range", etaRange, "Range a:b:step");
  add_truncation(sweepEta);
  add_output(sweepEta);

  CLI::App* heatmap = app.add_subcommand("heatmap", "Bell value over gain and efficiency");
  heatmap->add_option("--L", L, "Number of settings per side (default 2)");
  heatmap->add_option("--gamma-range", gammaRange, "Range a:b:step");
  heatmap->add_option("--eta-range", etaRange, "Range a:b:step");
  add_truncation(heatmap);
  add_output(heatmap);

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--oracle-max-N", config.oracleMaxN, "Largest N for the Fock-space oracle");
  verify->add_option("--samples", config.samples, "Monte-Carlo samples per loss check");
  add_output(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  auto given = [&](const std::string& name) {
    const CLI::Option* option = chosen->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  if (given("--N")) config.N = N;
  if (given("--gamma")) config.gamma = gamma;
  if (given("--L")) config.L = L;

  std::string text;
  int status = kOk;
  try {
    if (given("--L-range")) config.lRange = parse_int_range(lRange);
    if (given("--eta-range")) config.etaRange = parse_real_range(etaRange);
    if (given("--gamma-range")) config.gammaRange = parse_real_range(gammaRange);
    if (config.command == "verify" && (config.oracleMaxN < 0 || config.oracleMaxN > 10)) {
      throw InvalidArgument("--oracle-max-N must lie in [0, 10]");
    }
    if (config.command == "verify" && config.samples < 1) {
      throw InvalidArgument("--samples must be positive");
    }

    Table table;
    if (config.command == "dist") {
      table = cmd_dist(config);
    } else if (config.command == "sweep-settings") {
      table = cmd_sweep_settings(config);
    } else if (config.command == "sweep-eta") {
      table = cmd_sweep_eta(config);
    } else if (config.command == "heatmap") {
      table = cmd_heatmap(config);
    } else {
      VerifyOutcome outcome = cmd_verify(config);
      table = std::move(outcome.report);
      if (!outcome.passed) status = kVerificationFailure;
    }
    text = config.format == "json" ? to_json(table) : to_csv(table);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }

  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << config.out << '\n';
      return kInvalidArguments;
    }
  }
  return status;
}

}  // namespace svbell::cli
