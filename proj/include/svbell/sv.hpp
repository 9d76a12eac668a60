#pragma once

#include "svbell/loss.hpp"
#include "svbell/singlet.hpp"

namespace svbell {

/// Squeezed-vacuum source: gain and the truncation policy for the singlet expansion.
struct SVSpec {
  double gamma = 0.0;
  double massThreshold = 0.99;
  int nMaxCap = kMaxPhotonNumber;

  /// Throws InvalidArgument unless gamma > 0, 0 < massThreshold <= 1, 0 <= nMaxCap <= 60.
  void validate() const;
};

/// Weight of the 2N-photon singlet: cosh^-4(gamma) (N + 1) tanh^(2N)(gamma).
double lambda_sq(int N, double gamma);

/// Mean photon number per observer, sum_N lambda_N^2 N = 2 sinh^2(gamma).
double mean_photon_number(double gamma);

/// Smallest N_max whose cumulative singlet weight reaches spec.massThreshold.
/// Throws CapExceeded when that needs more than spec.nMaxCap.
int n_max_for(const SVSpec& spec);

/// Sum over N <= N_max of lambda_N^2 times the lossy singlet distribution.
/// Weights are not renormalized; the returned mass is the retained weight.
JointCountDistribution sv_mixture(Angle theta, const SVSpec& spec, const LossSpec& loss);

/// <a_A^dag a_A b_B^dag b_B> for polarizer settings thetaA, thetaB.
double intensity_correlation(Angle thetaA, Angle thetaB, double gamma);

/// (max - min) / (max + min) of intensity_correlation over the relative angle.
double intensity_visibility(double gamma);

}  // namespace svbell
