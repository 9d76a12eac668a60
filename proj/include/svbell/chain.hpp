#pragma once

#include <optional>
#include <vector>

#include "svbell/loss.hpp"
#include "svbell/singlet.hpp"
#include "svbell/sv.hpp"

namespace svbell {

/// L settings per side: adjacent relative angle theta = pi/(4L) and the
/// closing angle thetaPrime = (2L-1) pi/(4L).
class ChainSpec {
 public:
  int L() const { return settings_; }
  Angle theta() const { return theta_; }
  Angle thetaPrime() const { return thetaPrime_; }

 private:
  friend ChainSpec make_chain(int L);
  ChainSpec(int L, Angle theta, Angle thetaPrime)
      : settings_(L), theta_(theta), thetaPrime_(thetaPrime) {}

  int settings_;
  Angle theta_;
  Angle thetaPrime_;
};

/// Throws InvalidArgument for L < 2.
ChainSpec make_chain(int L);

/// Per-singlet-component part of an SV Bell value.
struct NContribution {
  int N = 0;
  double weight = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;

  double bell() const { return lhs - rhs; }
  double contribution() const { return weight * bell(); }
};

struct BellBreakdown {
  double lhs = 0.0;
  double rhs = 0.0;
  double bell = 0.0;
  std::vector<NContribution> perN;

  int L = 0;
  std::optional<double> gamma;
  double eta = 1.0;
  int nMax = 0;
  double mass = 1.0;
};

/// Chained inequality for the 2N-photon singlet:
/// lhs = (2L - 1) <|x - y|>_theta, rhs = <|x - y|>_thetaPrime.
BellBreakdown bell_fixed_N(int N, const ChainSpec& chain, const LossSpec& loss);

/// lambda_N^2-weighted Bell value of the squeezed vacuum, truncated per svSpec.
BellBreakdown bell_sv(const ChainSpec& chain, const SVSpec& svSpec, const LossSpec& loss);

/// Infinite-settings limit of bell_fixed_N at unit efficiency.
double asymptotic_bell_fixed_N(int N);

/// Infinite-settings limit of the SV right-hand side, sinh^3(2 gamma) / sinh(4 gamma).
double rhs_sv_asymptotic(double gamma);

}  // namespace svbell
