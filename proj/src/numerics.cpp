#include "svbell/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "svbell/errors.hpp"

namespace svbell {
namespace {

constexpr std::int64_t kTableSize = 4096;

const std::array<long double, kTableSize + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<long double, kTableSize + 1> values{};
    long double accumulated = 0.0L;
    for (std::int64_t k = 1; k <= kTableSize; ++k) {
      accumulated += std::log(static_cast<long double>(k));
      values[k] = accumulated;
    }
    return values;
  }();
  return table;
}

long double stirling_log_factorial(std::int64_t k) {
  const long double x = static_cast<long double>(k);
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  const long double series = inv * (1.0L / 12.0L - inv2 * (1.0L / 360.0L - inv2 / 1260.0L));
  return x * std::log(x) - x + 0.5L * std::log(2.0L * std::numbers::pi_v<long double> * x) +
         series;
}

template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> values) {
  if (values.size() <= 8) {
    Scalar total = 0;
    for (Scalar v : values) total += v;
    return total;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace

template <typename Scalar>
BasicSignedLogReal<Scalar> BasicSignedLogReal<Scalar>::from_value(Scalar value) {
  if (value == 0) return zero();
  return {value > 0 ? 1 : -1, std::log(std::abs(value))};
}

template <typename Scalar>
Scalar BasicSignedLogReal<Scalar>::value() const {
  if (sign == 0) return 0;
  return sign * std::exp(logMagnitude);
}

template <typename Scalar>
Scalar log_factorial(std::int64_t k) {
  if (k < 0) throw InvalidArgument("log_factorial: negative argument");
  if (k <= kTableSize) return static_cast<Scalar>(log_factorial_table()[k]);
  return static_cast<Scalar>(stirling_log_factorial(k));
}

template <typename Scalar>
BasicSignedLogReal<Scalar> log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("log_binomial: negative n");
  if (k < 0 || k > n) return BasicSignedLogReal<Scalar>::zero();
  const long double value = log_factorial<long double>(n) - log_factorial<long double>(k) -
                            log_factorial<long double>(n - k);
  return {1, static_cast<Scalar>(value)};
}

template <typename Scalar>
BasicSignedLogReal<Scalar> signed_log_pow(Scalar base, int exponent) {
  if (exponent < 0) throw InvalidArgument("signed_log_pow: negative exponent");
  if (exponent == 0) return {1, 0};
  if (base == 0) return BasicSignedLogReal<Scalar>::zero();
  const int sign = (base < 0 && exponent % 2 == 1) ? -1 : 1;
  return {sign, exponent * std::log(std::abs(base))};
}

template <typename Scalar>
BasicSignedLogReal<Scalar> signed_log_sum(std::span<const BasicSignedLogReal<Scalar>> terms) {
  Scalar largest = -std::numeric_limits<Scalar>::infinity();
  for (const auto& t : terms) {
    if (!t.is_zero()) largest = std::max(largest, t.logMagnitude);
  }
  if (!std::isfinite(largest)) return BasicSignedLogReal<Scalar>::zero();

  std::vector<Scalar> scaled;
  scaled.reserve(terms.size());
  for (const auto& t : terms) {
    if (!t.is_zero()) scaled.push_back(t.sign * std::exp(t.logMagnitude - largest));
  }
  const Scalar total = pairwise_sum<Scalar>(scaled);
  if (std::abs(total) < Scalar(1e-300)) return BasicSignedLogReal<Scalar>::zero();
  return {total > 0 ? 1 : -1, largest + std::log(std::abs(total))};
}

#define SVBELL_INSTANTIATE(Scalar)                                                             \
  template struct BasicSignedLogReal<Scalar>;                                                  \
  template Scalar log_factorial<Scalar>(std::int64_t);                                         \
  template BasicSignedLogReal<Scalar> log_binomial<Scalar>(std::int64_t, std::int64_t);        \
  template BasicSignedLogReal<Scalar> signed_log_pow<Scalar>(Scalar, int);                     \
  template BasicSignedLogReal<Scalar> signed_log_sum<Scalar>(                                  \
      std::span<const BasicSignedLogReal<Scalar>>);

SVBELL_INSTANTIATE(double)
SVBELL_INSTANTIATE(long double)

#undef SVBELL_INSTANTIATE

}  // namespace svbell
