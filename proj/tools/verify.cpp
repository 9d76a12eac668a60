// Self-checks behind `svbell verify`: each suite compares a production path
// against an independent route and reports its worst deviation.
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cli.hpp"
#include "svbell/lhv.hpp"
#include "svbell/loss.hpp"
#include "svbell/oracle.hpp"
#include "svbell/singlet.hpp"
#include "svbell/sv.hpp"

namespace svbell::cli {
namespace {

struct SuiteResult {
  std::string name;
  double metric = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

const std::vector<double>& oracle_angles() {
  static const std::vector<double> angles = {0.0,
                                             std::numbers::pi / 16,
                                             std::numbers::pi / 8,
                                             std::numbers::pi / 4,
                                             3 * std::numbers::pi / 8,
                                             std::numbers::pi / 2};
  return angles;
}

SuiteResult oracle_equivalence(int maxN) {
  double worst = 0.0;
  for (int N = 0; N <= maxN; ++N) {
    for (double theta : oracle_angles()) {
      const auto closed = joint_distribution(N, Angle{theta});
      const auto brute = oracle::joint_distribution(N, Angle{0.0}, Angle{theta});
      worst = std::max(worst, (closed.table() - brute.table()).cwiseAbs().maxCoeff());
    }
  }
  return {"oracle-equivalence", worst, 1e-10, worst <= 1e-10,
          fmt::format("N<={} angles={}", maxN, oracle_angles().size())};
}

SuiteResult uu_invariance(int maxN) {
  const std::vector<std::pair<double, double>> settings = {
      {0.3, 0.3 + std::numbers::pi / 8},
      {1.1, 1.1 + std::numbers::pi / 4},
      {-0.4, -0.4 + 3 * std::numbers::pi / 8},
      {2.0, 2.0 + 0.2},
  };
  double worst = 0.0;
  for (int N = 0; N <= maxN; ++N) {
    for (const auto& [a, b] : settings) {
      const auto absolute = oracle::joint_distribution(N, Angle{a}, Angle{b});
      const auto relative = joint_distribution(N, Angle{b - a});
      worst = std::max(worst, (absolute.table() - relative.table()).cwiseAbs().maxCoeff());
    }
  }
  return {"uu-invariance", worst, 1e-10, worst <= 1e-10,
          fmt::format("N<={} setting pairs={}", maxN, settings.size())};
}

SuiteResult normalization(std::uint64_t seed) {
  std::mt19937_64 generator(seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
  double worst = 0.0;
  for (int N = 0; N <= 20; ++N) {
    for (int k = 0; k < 50; ++k) {
      worst = std::max(worst, std::abs(joint_distribution(N, Angle{angle(generator)}).mass() - 1.0));
    }
  }
  return {"normalization", worst, 1e-9, worst <= 1e-9, "N<=20, 50 random angles each"};
}

SuiteResult lhv_bound(std::uint64_t seed) {
  double lowest = 0.0;
  for (int L = 2; L <= 3; ++L) {
    for (int cap = 0; cap <= 4; ++cap) lowest = std::min(lowest, lhv_minimum(L, cap));
  }
  std::mt19937_64 generator(seed);
  std::uniform_int_distribution<int> settings(2, 6);
  std::uniform_int_distribution<std::int64_t> count(0, 12);
  for (int trial = 0; trial < 100000; ++trial) {
    const int L = settings(generator);
    DeterministicStrategy strategy;
    for (int i = 0; i < L; ++i) {
      strategy.aliceValues.push_back(count(generator));
      strategy.bobValues.push_back(count(generator));
    }
    lowest = std::min(lowest, polygon_check(strategy));
  }
  return {"lhv-bound", lowest, 0.0, lowest >= 0.0,
          "exhaustive L<=3 cap<=4, 100000 random strategies L<=6 cap 12"};
}

// Per-cell z threshold whose Bonferroni family-wise false-alarm rate over `cells`
// comparisons equals that of a single two-sided 3-sigma test.
double familywise_threshold(std::size_t cells) {
  const double target = std::erfc(3.0 / std::numbers::sqrt2) / static_cast<double>(cells);
  double low = 0.0;
  double high = 20.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (low + high);
    (std::erfc(mid / std::numbers::sqrt2) > target ? low : high) = mid;
  }
  return high;
}

SuiteResult loss_monte_carlo(std::int64_t samples, std::uint64_t seed) {
  // Per-cell deviation in units of the binomial count standard deviation,
  // floored at one count for nearly empty cells.
  double worst = 0.0;
  std::size_t cells = 0;
  std::uint64_t stream = 0;
  for (int N : {1, 2, 4}) {
    const auto ideal = joint_distribution(N, Angle{std::numbers::pi / 8});
    for (double eta : {0.5, 0.83, 0.95}) {
      const auto exact = binomial_thin(ideal, LossSpec(eta));
      const auto sampled = oracle::mc_thin(ideal, eta, samples, seed + stream++);
      for (int x = 0; x <= N; ++x) {
        for (int y = 0; y <= N; ++y) {
          const double p = exact(x, y);
          const double expected = p * samples;
          const double sigma = std::max(1.0, std::sqrt(samples * p * (1.0 - p)));
          worst = std::max(worst, std::abs(sampled(x, y) * samples - expected) / sigma);
          ++cells;
        }
      }
    }
  }
  const double threshold = familywise_threshold(cells);
  return {"loss-monte-carlo", worst, threshold, worst <= threshold,
          fmt::format("N in {{1,2,4}}, eta in {{0.5,0.83,0.95}}, samples={}, cells={}, "
                      "family-wise 3-sigma band",
                      samples, cells)};
}

SuiteResult thinning_semigroup() {
  double worst = 0.0;
  for (int N : {1, 3, 6}) {
    const auto ideal = joint_distribution(N, Angle{0.4});
    for (const auto& [first, second] : {std::pair{0.9, 0.8}, std::pair{0.5, 0.7}, std::pair{0.3, 1.0}}) {
      const auto twice = binomial_thin(binomial_thin(ideal, LossSpec(first)), LossSpec(second));
      const auto once = binomial_thin(ideal, LossSpec(first * second));
      worst = std::max(worst, (twice.table() - once.table()).cwiseAbs().maxCoeff());
    }
  }
  return {"thinning-semigroup", worst, 1e-10, worst <= 1e-10, "N in {1,3,6}"};
}

SuiteResult sv_truncation() {
  double worst = 0.0;
  for (double gamma : {0.2, 0.5, 0.8}) {
    const SVSpec spec{gamma};
    const auto mixture = sv_mixture(Angle{std::numbers::pi / 8}, spec, LossSpec(0.9));
    double retained = 0.0;
    for (int N = 0; N <= n_max_for(spec); ++N) retained += lambda_sq(N, gamma);
    worst = std::max(worst, std::abs(mixture.mass() - retained));
  }
  return {"sv-truncation-mass", worst, 1e-9, worst <= 1e-9, "gamma in {0.2,0.5,0.8}"};
}

}  // namespace

VerifyOutcome cmd_verify(const RunConfig& config) {
  const std::vector<SuiteResult> suites = {
      oracle_equivalence(config.oracleMaxN),
      uu_invariance(std::min(config.oracleMaxN, 6)),
      normalization(config.seed),
      lhv_bound(config.seed),
      loss_monte_carlo(config.samples, config.seed),
      thinning_semigroup(),
      sv_truncation(),
  };

  VerifyOutcome outcome;
  outcome.report.metadata = {
      {"command", "verify"},
      {"oracle_max_N", fmt::format("{}", config.oracleMaxN)},
      {"samples", fmt::format("{}", config.samples)},
      {"seed", fmt::format("{}", config.seed)},
  };
  outcome.report.columns = {"suite", "status", "metric", "tolerance", "detail"};
  for (const auto& suite : suites) {
    outcome.passed = outcome.passed && suite.passed;
    outcome.report.rows.push_back({suite.name, std::string(suite.passed ? "pass" : "fail"),
                                   suite.metric, suite.tolerance, suite.detail});
  }
  return outcome;
}

}  // namespace svbell::cli
