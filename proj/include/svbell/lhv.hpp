#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace svbell {

/// Predetermined photon counts for each of Alice's and Bob's L settings.
struct DeterministicStrategy {
  std::vector<std::int64_t> aliceValues;
  std::vector<std::int64_t> bobValues;
};

/// sum_i |m_i - n_i| + sum_{i<L} |m_{i+1} - n_i| - |m_1 - n_L|. Never negative.
double polygon_check(const DeterministicStrategy& strategy);

/// Mean of |v_k - w_k| over paired samples. Throws InvalidArgument on length mismatch.
double empirical_distance(std::span<const std::int64_t> samplesV,
                          std::span<const std::int64_t> samplesW);

inline constexpr int kLhvMaxSettings = 4;
inline constexpr int kLhvMaxCap = 6;

/// Minimum of polygon_check over every strategy with counts in [0, cap].
/// Throws BudgetExceeded beyond L = 4 or cap = 6.
double lhv_minimum(int L, int cap);

}  // namespace svbell
