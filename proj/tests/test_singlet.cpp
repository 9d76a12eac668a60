#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "svbell/errors.hpp"
#include "svbell/singlet.hpp"

using namespace svbell;
using std::numbers::pi;

TEST_CASE("amplitude for N = 1") {
  for (double theta : {0.0, 0.2, pi / 4, 1.3}) {
    const SignedLogReal a = singlet_amplitude({1, 0, 0}, Angle{theta});
    CHECK(a.sign == 1);
    CHECK(a.value() == doctest::Approx(std::cos(theta) / std::sqrt(2.0)).epsilon(1e-14));
  }
}

TEST_CASE("diagonal amplitudes at theta = 0 carry the singlet coefficients") {
  for (int N = 0; N <= 30; ++N) {
    for (int n = 0; n <= N; ++n) {
      const double a = singlet_amplitude({N, n, n}, Angle{0.0}).value();
      CHECK(a * a == doctest::Approx(1.0 / (N + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("anticorrelated amplitudes at theta = pi/2") {
  for (int N = 0; N <= 30; ++N) {
    for (int n = 0; n <= N; ++n) {
      const double a = singlet_amplitude({N, n, N - n}, Angle{pi / 2}).value();
      CHECK(a * a == doctest::Approx(1.0 / (N + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(singlet_amplitude({61, 0, 0}, Angle{0.1}), RangeError);
  CHECK_THROWS_AS(joint_distribution(61, Angle{0.1}), RangeError);
  CHECK_THROWS_AS(singlet_amplitude({3, 4, 0}, Angle{0.1}), InvalidArgument);
  CHECK_THROWS_AS(joint_distribution(3, Angle{-0.1}), InvalidArgument);
  CHECK_THROWS_AS(joint_distribution(3, Angle{pi / 2 + 1e-9}), InvalidArgument);
  CHECK_NOTHROW(joint_distribution(60, Angle{pi / 2}));
}

TEST_CASE("joint distribution examples") {
  const auto quarter = joint_distribution(1, Angle{pi / 4});
  for (int n = 0; n <= 1; ++n) {
    for (int m = 0; m <= 1; ++m) CHECK(quarter(n, m) == doctest::Approx(0.25).epsilon(1e-14));
  }

  const auto diagonal = joint_distribution(3, Angle{0.0});
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) CHECK(diagonal(n, m) == (n == m ? doctest::Approx(0.25) : 0.0));
  }

  // Frozen from an independent symbolic expansion of the rotated Fock states.
  const double expected[3][3] = {
      {0.24285113019775792, 0.083333333333333333, 0.0071488698022420793},
      {0.083333333333333333, 0.16666666666666667, 0.083333333333333333},
      {0.0071488698022420793, 0.083333333333333333, 0.24285113019775792}};
  const auto eighth = joint_distribution(2, Angle{pi / 8});
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) CHECK(std::abs(eighth(n, m) - expected[n][m]) <= 1e-10);
  }
}

TEST_CASE("normalization for N <= 20 at random angles") {
  std::mt19937_64 generator(11);
  std::uniform_real_distribution<double> angle(0.0, pi / 2);
  for (int N = 0; N <= 20; ++N) {
    for (int k = 0; k < 50; ++k) CHECK(std::abs(joint_distribution(N, Angle{angle(generator)}).mass() - 1.0) <= 1e-9);
  }
}

TEST_CASE("normalization holds up to the supported maximum") {
  for (int N : {30, 45, 60}) {
    for (double theta : {0.05, 0.4, pi / 4, 1.2, 1.5}) {
      CHECK(std::abs(joint_distribution(N, Angle{theta}).mass() - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("exact support at the endpoints") {
  for (int N = 0; N <= 25; ++N) {
    const auto correlated = joint_distribution(N, Angle{0.0});
    const auto anticorrelated = joint_distribution(N, Angle{pi / 2});
    for (int n = 0; n <= N; ++n) {
      for (int m = 0; m <= N; ++m) {
        if (n != m) CHECK(correlated(n, m) == 0.0);
        if (m != N - n) CHECK(anticorrelated(n, m) == 0.0);
        if (m == N - n) CHECK(std::abs(anticorrelated(n, m) - 1.0 / (N + 1)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("exchange symmetry") {
  for (int N = 0; N <= 12; ++N) {
    for (double theta : {0.1, 0.5, 0.9, 1.4}) {
      const auto d = joint_distribution(N, Angle{theta});
      CHECK((d.table() - d.table().transpose()).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("mean absolute difference") {
  CHECK(mean_abs_difference(joint_distribution(1, Angle{0.0})) == 0.0);
  for (double theta : {0.1, 0.7, 1.2}) {
    const double s = std::sin(theta);
    CHECK(mean_abs_difference(joint_distribution(1, Angle{theta})) == doctest::Approx(s * s).epsilon(1e-13));
  }
  for (int N = 0; N <= 20; ++N) {
    const double n = N;
    const double expected = N % 2 ? (n * n / 2 + n + 0.5) / (n + 1) : (n * n / 2 + n) / (n + 1);
    CHECK(mean_abs_difference(joint_distribution(N, Angle{pi / 2})) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("JointCountDistribution rejects malformed tables") {
  CHECK_THROWS_AS(JointCountDistribution(Eigen::MatrixXd::Zero(2, 3)), InvalidArgument);
  Eigen::MatrixXd negative = Eigen::MatrixXd::Zero(2, 2);
  negative(0, 1) = -0.1;
  CHECK_THROWS_AS(JointCountDistribution{negative}, InvalidArgument);
  CHECK(JointCountDistribution().mass() == 1.0);
}
