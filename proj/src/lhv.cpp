#include "svbell/lhv.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "svbell/errors.hpp"

namespace svbell {

double polygon_check(const DeterministicStrategy& strategy) {
  const auto& n = strategy.aliceValues;
  const auto& m = strategy.bobValues;
  if (n.empty() || n.size() != m.size()) {
    throw InvalidArgument("strategy needs equal, nonzero numbers of Alice and Bob values");
  }
  const std::size_t L = n.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < L; ++i) total += std::llabs(m[i] - n[i]);
  for (std::size_t i = 0; i + 1 < L; ++i) total += std::llabs(m[i + 1] - n[i]);
  total -= std::llabs(m[0] - n[L - 1]);
  return static_cast<double>(total);
}

double empirical_distance(std::span<const std::int64_t> samplesV,
                          std::span<const std::int64_t> samplesW) {
  if (samplesV.size() != samplesW.size()) throw InvalidArgument("sample lengths differ");
  if (samplesV.empty()) throw InvalidArgument("no samples");
  long double total = 0.0L;
  for (std::size_t k = 0; k < samplesV.size(); ++k) total += std::llabs(samplesV[k] - samplesW[k]);
  return static_cast<double>(total / samplesV.size());
}

double lhv_minimum(int L, int cap) {
  if (L < 1 || cap < 0) throw InvalidArgument("need L >= 1 and cap >= 0");
  if (L > kLhvMaxSettings || cap > kLhvMaxCap) {
    throw BudgetExceeded("exhaustive LHV enumeration limited to L <= 4 and cap <= 6");
  }
  DeterministicStrategy strategy{std::vector<std::int64_t>(L, 0), std::vector<std::int64_t>(L, 0)};
  double best = std::numeric_limits<double>::infinity();
  // Odometer over the 2L digits, Alice's values first.
  while (true) {
    best = std::min(best, polygon_check(strategy));
    int digit = 0;
    for (; digit < 2 * L; ++digit) {
      auto& value = digit < L ? strategy.aliceValues[digit] : strategy.bobValues[digit - L];
      if (value < cap) {
        ++value;
        break;
      }
      value = 0;
    }
    if (digit == 2 * L) break;
  }
  return best;
}

}  // namespace svbell
