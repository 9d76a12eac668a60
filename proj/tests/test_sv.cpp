#include <doctest.h>

#include <cmath>
#include <numbers>

#include "svbell/errors.hpp"
#include "svbell/sv.hpp"

using namespace svbell;
using std::numbers::pi;

namespace {

// Sums f(N) * lambda_N^2 until the retained weight reaches 1 - tail.
template <typename F>
double weighted_series(double gamma, double tail, F f) {
  double retained = 0.0;
  double total = 0.0;
  for (int N = 0; retained < 1.0 - tail; ++N) {
    const double w = lambda_sq(N, gamma);
    retained += w;
    total += w * f(N);
  }
  return total;
}

}  // namespace

TEST_CASE("lambda_sq") {
  CHECK(lambda_sq(0, 1e-8) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(lambda_sq(0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(lambda_sq(-1, 0.5), InvalidArgument);
  for (double gamma : {0.1, 0.5, 1.0, 1.5}) {
    double sum = 0.0;
    for (int N = 0; N <= 200; ++N) sum += lambda_sq(N, gamma);
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("partial sums are nondecreasing") {
  double previous = 0.0;
  double cumulative = 0.0;
  for (int N = 0; N <= 100; ++N) {
    cumulative += lambda_sq(N, 1.1);
    CHECK(cumulative >= previous);
    previous = cumulative;
  }
  CHECK(cumulative == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mean photon number identity") {
  CHECK(mean_photon_number(0.8) == doctest::Approx(1.5774644711948853).epsilon(1e-14));
  for (double gamma : {0.2, 0.5, 0.8, 1.2}) {
    const double series = weighted_series(gamma, 1e-10, [](int N) { return static_cast<double>(N); });
    CHECK(std::abs(series - mean_photon_number(gamma)) <= 1e-8);
  }
}

TEST_CASE("truncation cutoff") {
  CHECK(n_max_for(SVSpec{0.1}) == 1);
  CHECK(n_max_for(SVSpec{0.5}) == 3);
  CHECK(n_max_for(SVSpec{0.8}) == 7);
  for (double gamma = 0.05; gamma <= 0.95; gamma += 0.05) CHECK(n_max_for(SVSpec{gamma}) <= 10);
  CHECK(n_max_for(SVSpec{0.99}) == 11);
  CHECK_THROWS_AS(n_max_for(SVSpec{3.0, 0.99, 60}), CapExceeded);
  CHECK_THROWS_AS(n_max_for(SVSpec{0.8, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(n_max_for(SVSpec{0.8, 0.99, 61}), InvalidArgument);
}

TEST_CASE("mixture near zero gain is the vacuum") {
  const auto vacuum = sv_mixture(Angle{0.7}, SVSpec{1e-6}, LossSpec(1.0));
  CHECK(vacuum.maxCount() == 0);
  CHECK(vacuum(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("lossless mixture at theta = 0 is diagonal") {
  const SVSpec spec{0.8};
  const auto mixture = sv_mixture(Angle{0.0}, spec, LossSpec(1.0));
  CHECK(mixture.maxCount() == n_max_for(spec));
  CHECK(mixture.mass() >= 0.99);
  for (int n = 0; n <= mixture.maxCount(); ++n) {
    for (int m = 0; m <= mixture.maxCount(); ++m) {
      if (n != m) CHECK(mixture(n, m) == 0.0);
    }
  }
}

TEST_CASE("mixture mass equals the retained weight") {
  for (double eta : {1.0, 0.9, 0.4}) {
    for (double gamma : {0.3, 0.8, 1.1}) {
      const SVSpec spec{gamma};
      double retained = 0.0;
      for (int N = 0; N <= n_max_for(spec); ++N) retained += lambda_sq(N, gamma);
      CHECK(std::abs(sv_mixture(Angle{pi / 8}, spec, LossSpec(eta)).mass() - retained) <= 1e-9);
    }
  }
}

TEST_CASE("lossy mixture is the weighted sum of thinned components") {
  const SVSpec spec{0.8};
  const LossSpec loss(0.9);
  const auto mixture = sv_mixture(Angle{pi / 8}, spec, loss);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(mixture.maxCount() + 1, mixture.maxCount() + 1);
  for (int N = 0; N <= mixture.maxCount(); ++N) {
    const auto component = binomial_thin(joint_distribution(N, Angle{pi / 8}), loss);
    for (int x = 0; x <= N; ++x) {
      for (int y = 0; y <= N; ++y) expected(x, y) += lambda_sq(N, 0.8) * component(x, y);
    }
  }
  CHECK((mixture.table() - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("intensity correlation") {
  CHECK(intensity_correlation(Angle{0.0}, Angle{0.0}, 0.8) == doctest::Approx(2.0329293145385225).epsilon(1e-14));
  for (double gamma : {0.1, 0.8, 2.0}) {
    const double s = std::sinh(gamma);
    const double c = std::cosh(gamma);
    CHECK(std::abs(intensity_correlation(Angle{0.3}, Angle{0.3}, gamma) - (s * s * c * c + s * s * s * s)) <=
          1e-12 * (s * s * c * c + s * s * s * s));
    CHECK(std::abs(intensity_correlation(Angle{0.3}, Angle{0.3 + pi / 2}, gamma) - s * s * s * s) <=
          1e-12 * s * s * s * s);
  }
}

TEST_CASE("intensity correlation from the singlet expansion") {
  // <n m> with Alice on H and Bob on V+theta at equal settings, summed over components.
  for (double gamma : {0.2, 0.6}) {
    const double series = weighted_series(gamma, 1e-13, [](int N) {
      const auto d = joint_distribution(N, Angle{0.0});
      double moment = 0.0;
      for (int n = 0; n <= N; ++n) moment += n * n * d(n, n);
      return moment;
    });
    CHECK(std::abs(series - intensity_correlation(Angle{0.0}, Angle{0.0}, gamma)) <= 1e-8);
  }
}

TEST_CASE("visibility limits") {
  CHECK(intensity_visibility(1e-4) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(intensity_visibility(0.05) >= 0.99);
  CHECK(std::abs(intensity_visibility(6.0) - 1.0 / 3.0) <= 1e-3);
  CHECK(intensity_visibility(1.0) > intensity_visibility(2.0));
}
