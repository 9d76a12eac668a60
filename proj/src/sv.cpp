#include "svbell/sv.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "svbell/errors.hpp"

namespace svbell {
namespace {

void check_gain(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gain must be positive");
}

// ln cosh without overflow for large gain.
double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace

void SVSpec::validate() const {
  check_gain(gamma);
  if (!(massThreshold > 0.0 && massThreshold <= 1.0)) {
    throw InvalidArgument("mass threshold must lie in (0, 1]");
  }
  if (nMaxCap < 0 || nMaxCap > kMaxPhotonNumber) {
    throw InvalidArgument("photon-number cap must lie in [0, " +
                          std::to_string(kMaxPhotonNumber) + "]");
  }
}

double lambda_sq(int N, double gamma) {
  if (N < 0) throw InvalidArgument("photon number must be nonnegative");
  check_gain(gamma);
  const double logWeight =
      -4.0 * log_cosh(gamma) + std::log(N + 1.0) + 2.0 * N * std::log(std::tanh(gamma));
  return std::exp(logWeight);
}

double mean_photon_number(double gamma) {
  const double s = std::sinh(gamma);
  return 2.0 * s * s;
}

int n_max_for(const SVSpec& spec) {
  spec.validate();
  double cumulative = 0.0;
  for (int N = 0; N <= spec.nMaxCap; ++N) {
    cumulative += lambda_sq(N, spec.gamma);
    if (cumulative >= spec.massThreshold) return N;
  }
  throw CapExceeded("cumulative singlet weight " + std::to_string(cumulative) +
                    " stays below threshold " + std::to_string(spec.massThreshold) +
                    " up to N = " + std::to_string(spec.nMaxCap));
}

JointCountDistribution sv_mixture(Angle theta, const SVSpec& spec, const LossSpec& loss) {
  const int nMax = n_max_for(spec);
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(nMax + 1, nMax + 1);
  for (int N = 0; N <= nMax; ++N) {
    const JointCountDistribution component = binomial_thin(joint_distribution(N, theta), loss);
    table.topLeftCorner(N + 1, N + 1) += lambda_sq(N, spec.gamma) * component.table();
  }
  return JointCountDistribution(std::move(table));
}

double intensity_correlation(Angle thetaA, Angle thetaB, double gamma) {
  check_gain(gamma);
  const double s = std::sinh(gamma);
  const double c = std::cosh(gamma);
  const double relative = std::cos(thetaA.radians - thetaB.radians);
  return s * s * c * c * relative * relative + s * s * s * s;
}

double intensity_visibility(double gamma) {
  const double highest = intensity_correlation(Angle{0.0}, Angle{0.0}, gamma);
  const double lowest = intensity_correlation(Angle{0.0}, Angle{std::numbers::pi / 2}, gamma);
  return (highest - lowest) / (highest + lowest);
}

}  // namespace svbell
