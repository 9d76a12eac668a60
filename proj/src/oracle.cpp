// Brute-force reference computations. Shares no arithmetic with the closed-form
// singlet kernels: exact integer binomials, explicit polynomial expansion.
#include "svbell/oracle.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "svbell/errors.hpp"
#include "svbell/parallel.hpp"

namespace svbell::oracle {
namespace {

constexpr int kTableRows = 2 * kOracleMaxN + 1;

const std::vector<std::vector<std::uint64_t>>& pascal() {
  static const auto rows = [] {
    std::vector<std::vector<std::uint64_t>> t(kTableRows);
    for (int n = 0; n < kTableRows; ++n) {
      t[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return rows;
}

double binomial(int n, int k) { return static_cast<double>(pascal()[n][k]); }

double factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return static_cast<double>(f);
}

void check_scale(int N) {
  if (N < 0) throw InvalidArgument("photon number must be nonnegative");
  if (N > kOracleMaxN) throw RangeError("oracle supports N <= 10 only");
}

// Fock amplitudes of |first_{H+theta}, second_{V+theta}> on |a_H, (total - a)_V>, indexed by a.
// b_{H+theta}^dag = cos b_H^dag + sin b_V^dag, b_{V+theta}^dag = -sin b_H^dag + cos b_V^dag.
std::vector<double> rotated_fock_state(int first, int second, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<double> fromFirst(first + 1);
  for (int p = 0; p <= first; ++p) {
    fromFirst[p] = binomial(first, p) * std::pow(c, p) * std::pow(s, first - p);
  }
  std::vector<double> fromSecond(second + 1);
  for (int q = 0; q <= second; ++q) {
    fromSecond[q] = binomial(second, q) * std::pow(-s, q) * std::pow(c, second - q);
  }
  const int total = first + second;
  std::vector<double> coefficient(total + 1, 0.0);
  for (int p = 0; p <= first; ++p) {
    for (int q = 0; q <= second; ++q) coefficient[p + q] += fromFirst[p] * fromSecond[q];
  }
  const double norm = std::sqrt(factorial(first) * factorial(second));
  for (int a = 0; a <= total; ++a) {
    coefficient[a] *= std::sqrt(factorial(a) * factorial(total - a)) / norm;
  }
  return coefficient;
}

}  // namespace

void FockVector::add(const FockOccupation& occupation, double amplitude) {
  amplitudes_[occupation] += amplitude;
}

double FockVector::amplitude(const FockOccupation& occupation) const {
  const auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? 0.0 : it->second;
}

double FockVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [occupation, amplitude] : amplitudes_) total += amplitude * amplitude;
  return total;
}

FockVector build_singlet(int N) {
  check_scale(N);
  FockVector state;
  const double scale = 1.0 / std::sqrt(N + 1.0);
  for (int n = 0; n <= N; ++n) {
    state.add({n, N - n, N - n, n}, (n % 2 == 0 ? 1.0 : -1.0) * scale);
  }
  return state;
}

double rotated_projection_amplitude(const FockVector& state, int N, int n, int m, Angle thetaA,
                                    Angle thetaB) {
  check_scale(N);
  if (n < 0 || n > N || m < 0 || m > N) throw InvalidArgument("counts must lie in [0, N]");
  const std::vector<double> alice = rotated_fock_state(n, N - n, thetaA.radians);
  const std::vector<double> bob = rotated_fock_state(N - m, m, thetaB.radians);
  double overlap = 0.0;
  for (const auto& [occ, amplitude] : state) {
    if (occ[0] + occ[1] != N || occ[2] + occ[3] != N) continue;
    overlap += amplitude * alice[occ[0]] * bob[occ[2]];
  }
  return overlap;
}

double rotated_projection_amplitude(const FockVector& state, int N, int n, int m, Angle theta) {
  return rotated_projection_amplitude(state, N, n, m, Angle{0.0}, theta);
}

JointCountDistribution joint_distribution(int N, Angle thetaA, Angle thetaB) {
  const FockVector state = build_singlet(N);
  Eigen::MatrixXd table(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      const double a = rotated_projection_amplitude(state, N, n, m, thetaA, thetaB);
      table(n, m) = a * a;
    }
  }
  return JointCountDistribution(std::move(table));
}

JointCountDistribution mc_thin(const JointCountDistribution& dist, double eta,
                               std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("efficiency must lie in [0, 1]");
  const int size = dist.maxCount() + 1;
  if (dist.mass() == 0.0) return JointCountDistribution(Eigen::MatrixXd::Zero(size, size));

  std::vector<double> weights(static_cast<std::size_t>(size) * size);
  for (int n = 0; n < size; ++n) {
    for (int m = 0; m < size; ++m) weights[n * size + m] = dist(n, m);
  }

  // Fixed chunking: each chunk owns a generator seeded from (seed, chunk index),
  // so the result does not depend on how chunks are scheduled.
  constexpr std::int64_t kChunk = 1 << 16;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<std::int64_t>> counts(chunks);
  parallel_for(static_cast<std::size_t>(chunks), [&](std::size_t chunk) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 generator(sequence);
    std::discrete_distribution<int> draw(weights.begin(), weights.end());
    auto& local = counts[chunk];
    local.assign(static_cast<std::size_t>(size) * size, 0);
    const std::int64_t begin = static_cast<std::int64_t>(chunk) * kChunk;
    const std::int64_t end = std::min(samples, begin + kChunk);
    auto thin = [&](int count) {
      if (eta == 1.0 || count == 0) return count;
      if (eta == 0.0) return 0;
      return std::binomial_distribution<int>(count, eta)(generator);
    };
    for (std::int64_t k = begin; k < end; ++k) {
      const int cell = draw(generator);
      const int x = thin(cell / size);
      const int y = thin(cell % size);
      ++local[x * size + y];
    }
  });

  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(size, size);
  for (const auto& local : counts) {
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) table(x, y) += static_cast<double>(local[x * size + y]);
    }
  }
  table *= dist.mass() / static_cast<double>(samples);
  return JointCountDistribution(std::move(table));
}

}  // namespace svbell::oracle
