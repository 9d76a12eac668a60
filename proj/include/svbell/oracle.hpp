#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "svbell/singlet.hpp"

namespace svbell::oracle {

inline constexpr int kOracleMaxN = 10;

/// Occupations (a_H, a_V, b_H, b_V).
using FockOccupation = std::array<int, 4>;

/// Sparse real state vector in the four-mode Fock basis.
class FockVector {
 public:
  void add(const FockOccupation& occupation, double amplitude);
  double amplitude(const FockOccupation& occupation) const;
  double norm_squared() const;
  std::size_t size() const { return amplitudes_.size(); }

  auto begin() const { return amplitudes_.begin(); }
  auto end() const { return amplitudes_.end(); }

 private:
  std::map<FockOccupation, double> amplitudes_;
};

/// (-1)^n / sqrt(N + 1) on |n, N-n>_a |N-n, n>_b.
FockVector build_singlet(int N);

/// <state| (|n_{H+thetaA}, (N-n)_{V+thetaA}>_a |(N-m)_{H+thetaB}, m_{V+thetaB}>_b),
/// found by expanding the rotated creation-operator powers in the H/V basis.
double rotated_projection_amplitude(const FockVector& state, int N, int n, int m,
                                    Angle thetaA, Angle thetaB);

/// Alice at H (thetaA = 0), Bob at relative angle theta.
double rotated_projection_amplitude(const FockVector& state, int N, int n, int m, Angle theta);

/// Joint count table of build_singlet(N) at absolute settings thetaA, thetaB.
JointCountDistribution joint_distribution(int N, Angle thetaA, Angle thetaB);

/// Empirical distribution from sampling (n, m) from dist and thinning both counts
/// with probability eta. Deterministic in (seed, samples); scaled by dist.mass().
JointCountDistribution mc_thin(const JointCountDistribution& dist, double eta,
                               std::int64_t samples, std::uint64_t seed);

}  // namespace svbell::oracle
