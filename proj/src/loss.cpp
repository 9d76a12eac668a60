#include "svbell/loss.hpp"

#include "svbell/errors.hpp"

namespace svbell {

LossSpec::LossSpec(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("efficiency must lie in [0, 1]");
}

JointCountDistribution binomial_thin(const JointCountDistribution& ideal, const LossSpec& spec) {
  if (spec.eta() == 1.0) return ideal;
  Eigen::MatrixXd thinned = binomial_thin(ideal.table(), spec.eta());
  return JointCountDistribution(std::move(thinned));
}

}  // namespace svbell
