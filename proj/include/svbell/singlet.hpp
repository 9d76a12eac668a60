#pragma once

#include <Eigen/Dense>

#include "svbell/numerics.hpp"

namespace svbell {

/// Relative polarizer angle in radians.
struct Angle {
  double radians = 0.0;
};

/// Photons per beam N, Alice's count n in her first output and Bob's count m in his.
struct SingletIndex {
  int N = 0;
  int n = 0;
  int m = 0;
};

/// Probability table p(n, m) for 0 <= n, m <= maxCount.
class JointCountDistribution {
 public:
  JointCountDistribution() = default;
  /// Takes a square table of nonnegative entries.
  explicit JointCountDistribution(Eigen::MatrixXd table);

  int maxCount() const { return static_cast<int>(table_.rows()) - 1; }
  double operator()(int n, int m) const { return table_(n, m); }
  const Eigen::MatrixXd& table() const { return table_; }
  double mass() const { return mass_; }

 private:
  Eigen::MatrixXd table_ = Eigen::MatrixXd::Ones(1, 1);
  double mass_ = 1.0;
};

/// Cosine and sine of an angle, exact at 0 and pi/2.
struct CosSin {
  double cos;
  double sin;
};
CosSin exact_cos_sin(Angle theta);

/// Amplitude for Alice seeing n photons in H and Bob seeing m photons in V+theta
/// on the 2N-photon singlet.
SignedLogReal singlet_amplitude(const SingletIndex& index, Angle theta);

/// Lossless joint count distribution of the 2N-photon singlet at relative angle theta.
JointCountDistribution joint_distribution(int N, Angle theta);

/// Sum over the table of |m - n| p(n, m).
template <typename Derived>
typename Derived::Scalar mean_abs_difference(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  Scalar total(0);
  for (Eigen::Index m = 0; m < p.cols(); ++m) {
    for (Eigen::Index n = 0; n < p.rows(); ++n) {
      if (n != m) total += Scalar(n > m ? n - m : m - n) * p(n, m);
    }
  }
  return total;
}

inline double mean_abs_difference(const JointCountDistribution& dist) {
  return mean_abs_difference(dist.table());
}

}  // namespace svbell
