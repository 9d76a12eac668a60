#include "svbell/chain.hpp"

#include <cmath>
#include <numbers>

#include "svbell/errors.hpp"

namespace svbell {

ChainSpec make_chain(int L) {
  if (L < 2) throw InvalidArgument("a chain needs at least two settings per side");
  const double theta = std::numbers::pi / (4.0 * L);
  return ChainSpec(L, Angle{theta}, Angle{std::numbers::pi / 2 - theta});
}

BellBreakdown bell_fixed_N(int N, const ChainSpec& chain, const LossSpec& loss) {
  // All 2L - 1 adjacent pairs sit at the same relative angle theta.
  const double adjacent =
      mean_abs_difference(binomial_thin(joint_distribution(N, chain.theta()), loss));
  const double closing =
      mean_abs_difference(binomial_thin(joint_distribution(N, chain.thetaPrime()), loss));

  BellBreakdown result;
  result.lhs = (2.0 * chain.L() - 1.0) * adjacent;
  result.rhs = closing;
  result.bell = result.lhs - result.rhs;
  result.perN.push_back({N, 1.0, result.lhs, result.rhs});
  result.L = chain.L();
  result.eta = loss.eta();
  result.nMax = N;
  result.mass = 1.0;
  return result;
}

BellBreakdown bell_sv(const ChainSpec& chain, const SVSpec& svSpec, const LossSpec& loss) {
  const int nMax = n_max_for(svSpec);

  BellBreakdown result;
  result.mass = 0.0;
  for (int N = 0; N <= nMax; ++N) {
    const double weight = lambda_sq(N, svSpec.gamma);
    const BellBreakdown component = bell_fixed_N(N, chain, loss);
    result.lhs += weight * component.lhs;
    result.rhs += weight * component.rhs;
    result.mass += weight;
    result.perN.push_back({N, weight, component.lhs, component.rhs});
  }
  result.bell = result.lhs - result.rhs;
  result.L = chain.L();
  result.gamma = svSpec.gamma;
  result.eta = loss.eta();
  result.nMax = nMax;
  return result;
}

double asymptotic_bell_fixed_N(int N) {
  if (N < 0) throw InvalidArgument("photon number must be nonnegative");
  const double n = N;
  if (N % 2 == 1) return -(0.5 * n * n + n + 0.5) / (n + 1.0);
  return -(0.5 * n * n + n) / (n + 1.0);
}

double rhs_sv_asymptotic(double gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("gain must be positive");
  // sinh^3(2g) / sinh(4g) rewritten to avoid overflowing sinh(4g).
  return 0.5 * std::sinh(2.0 * gamma) * std::tanh(2.0 * gamma);
}

}  // namespace svbell
