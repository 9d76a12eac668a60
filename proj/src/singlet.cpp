#include "svbell/singlet.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "svbell/errors.hpp"

namespace svbell {
namespace {

void check_photon_number(int N) {
  if (N < 0) throw InvalidArgument("photon number must be nonnegative");
  if (N > kMaxPhotonNumber) {
    throw RangeError("photon number " + std::to_string(N) + " exceeds supported maximum " +
                     std::to_string(kMaxPhotonNumber));
  }
}

void check_angle(Angle theta) {
  if (!(theta.radians >= 0.0 && theta.radians <= std::numbers::pi / 2)) {
    throw InvalidArgument("relative angle must lie in [0, pi/2]");
  }
}

}  // namespace

JointCountDistribution::JointCountDistribution(Eigen::MatrixXd table) : table_(std::move(table)) {
  if (table_.rows() == 0 || table_.rows() != table_.cols()) {
    throw InvalidArgument("joint count table must be square and nonempty");
  }
  if ((table_.array() < 0.0).any() || !table_.allFinite()) {
    throw InvalidArgument("joint count table entries must be finite and nonnegative");
  }
  mass_ = table_.sum();
}

CosSin exact_cos_sin(Angle theta) {
  if (theta.radians == 0.0) return {1.0, 0.0};
  if (theta.radians == std::numbers::pi / 2) return {0.0, 1.0};
  return {std::cos(theta.radians), std::sin(theta.radians)};
}

SignedLogReal singlet_amplitude(const SingletIndex& index, Angle theta) {
  const auto [N, n, m] = index;
  check_photon_number(N);
  if (n < 0 || n > N || m < 0 || m > N) throw InvalidArgument("counts must lie in [0, N]");
  check_angle(theta);

  // The alternating sum cancels heavily near N = 60; accumulate in extended precision.
  using Extended = long double;
  const auto [c, s] = exact_cos_sin(theta);
  const Extended cosine = c == 0.0 || c == 1.0 ? c : std::cos(static_cast<Extended>(theta.radians));
  const Extended sine = s == 0.0 || s == 1.0 ? s : std::sin(static_cast<Extended>(theta.radians));
  const int first = std::max(0, m - n);
  const int last = std::min(N - n, m);

  std::vector<ExtendedSignedLogReal> terms;
  terms.reserve(static_cast<std::size_t>(std::max(0, last - first + 1)));
  for (int q = first; q <= last; ++q) {
    const int sinPower = 2 * q + n - m;
    ExtendedSignedLogReal term = log_binomial<Extended>(N - m, N - n - q) *
                                 log_binomial<Extended>(m, q) *
                                 signed_log_pow(cosine, N - sinPower) *
                                 signed_log_pow(sine, sinPower);
    if (q % 2 == 1) term = -term;
    terms.push_back(term);
  }
  ExtendedSignedLogReal amplitude = signed_log_sum(terms);
  if (amplitude.is_zero()) return SignedLogReal::zero();

  const Extended logXi = log_factorial<Extended>(N - n) + log_factorial<Extended>(n) -
                         std::log(static_cast<Extended>(N + 1)) -
                         log_factorial<Extended>(N - m) - log_factorial<Extended>(m);
  amplitude.logMagnitude += logXi / 2;
  if (n % 2 == 1) amplitude = -amplitude;
  return static_cast<SignedLogReal>(amplitude);
}

JointCountDistribution joint_distribution(int N, Angle theta) {
  check_photon_number(N);
  check_angle(theta);
  Eigen::MatrixXd table(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      const SignedLogReal a = singlet_amplitude({N, n, m}, theta);
      table(n, m) = a.is_zero() ? 0.0 : std::exp(2.0 * a.logMagnitude);
    }
  }
  return JointCountDistribution(std::move(table));
}

}  // namespace svbell
