#pragma once

#include <Eigen/Dense>

#include "svbell/numerics.hpp"
#include "svbell/singlet.hpp"

namespace svbell {

/// Per-photon detection efficiency, shared by Alice and Bob.
class LossSpec {
 public:
  explicit LossSpec(double eta = 1.0);
  double eta() const { return eta_; }

 private:
  double eta_;
};

/// Column-stochastic Bernoulli loss kernel T(x, n) = C(n, x) eta^x (1 - eta)^(n - x).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> thinning_matrix(int maxCount, Scalar eta) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(maxCount + 1, maxCount + 1);
  const double kept = static_cast<double>(eta);
  for (int n = 0; n <= maxCount; ++n) {
    for (int x = 0; x <= n; ++x) {
      const SignedLogReal term =
          log_binomial(n, x) * signed_log_pow(kept, x) * signed_log_pow(1.0 - kept, n - x);
      kernel(x, n) = Scalar(term.value());
    }
  }
  return kernel;
}

/// Applies independent Bernoulli loss to both counts of a joint count table.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> binomial_thin(
    const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar eta) {
  const auto kernel = thinning_matrix(static_cast<int>(p.rows()) - 1, eta);
  return kernel * p * kernel.transpose();
}

JointCountDistribution binomial_thin(const JointCountDistribution& ideal, const LossSpec& spec);

}  // namespace svbell
