#pragma once

#include <cstdint>
#include <ranges>
#include <span>

namespace svbell {

/// Largest photon number per beam for which the closed-form kernels are supported.
inline constexpr int kMaxPhotonNumber = 60;

/// A real number stored as sign * exp(logMagnitude). sign == 0 is an exact zero
/// and logMagnitude is then meaningless.
template <typename Scalar>
struct BasicSignedLogReal {
  int sign = 0;
  Scalar logMagnitude = 0;

  static constexpr BasicSignedLogReal zero() { return {}; }
  static BasicSignedLogReal from_value(Scalar value);

  bool is_zero() const { return sign == 0; }
  Scalar value() const;

  template <typename Other>
  explicit operator BasicSignedLogReal<Other>() const {
    return {sign, static_cast<Other>(logMagnitude)};
  }

  friend BasicSignedLogReal operator*(BasicSignedLogReal a, BasicSignedLogReal b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.sign * b.sign, a.logMagnitude + b.logMagnitude};
  }
  friend BasicSignedLogReal operator-(BasicSignedLogReal a) { return {-a.sign, a.logMagnitude}; }
};

using SignedLogReal = BasicSignedLogReal<double>;
using ExtendedSignedLogReal = BasicSignedLogReal<long double>;

/// ln(k!). Exact-table accuracy up to 4096, Stirling series beyond.
template <typename Scalar = double>
Scalar log_factorial(std::int64_t k);

/// ln C(n, k) as a positive value, or an exact zero when k is outside [0, n].
template <typename Scalar = double>
BasicSignedLogReal<Scalar> log_binomial(std::int64_t n, std::int64_t k);

/// base^exponent in the log domain. 0^0 == 1; 0^e is an exact zero for e > 0.
template <typename Scalar>
BasicSignedLogReal<Scalar> signed_log_pow(Scalar base, int exponent);

/// Sums log-domain terms by factoring out the largest magnitude and adding the
/// scaled terms pairwise. Cancellation below 1e-300 of the largest term is an exact zero.
template <typename Scalar>
BasicSignedLogReal<Scalar> signed_log_sum(std::span<const BasicSignedLogReal<Scalar>> terms);

template <std::ranges::contiguous_range Range>
auto signed_log_sum(const Range& terms) {
  using Term = std::ranges::range_value_t<Range>;
  return signed_log_sum(std::span<const Term>(std::ranges::data(terms), std::ranges::size(terms)));
}

}  // namespace svbell
