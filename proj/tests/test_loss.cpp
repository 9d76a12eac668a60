#include <doctest.h>

#include <cmath>
#include <numbers>

#include "svbell/errors.hpp"
#include "svbell/loss.hpp"
#include "svbell/oracle.hpp"

using namespace svbell;
using std::numbers::pi;

TEST_CASE("efficiency bounds") {
  CHECK_THROWS_AS(LossSpec(-0.01), InvalidArgument);
  CHECK_THROWS_AS(LossSpec(1.01), InvalidArgument);
  CHECK_NOTHROW(LossSpec(0.0));
}

TEST_CASE("lossless and fully lossy limits") {
  const auto ideal = joint_distribution(4, Angle{0.3});
  CHECK(binomial_thin(ideal, LossSpec(1.0)).table() == ideal.table());

  const auto dark = binomial_thin(ideal, LossSpec(0.0));
  CHECK(dark(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dark.table().sum() - dark(0, 0) == 0.0);
}

TEST_CASE("N = 1 at theta = 0 with eta = 0.9") {
  const auto thinned = binomial_thin(joint_distribution(1, Angle{0.0}), LossSpec(0.9));
  // Half the weight on (1,1): both kept 0.81, one lost 0.09 each, both lost 0.01.
  CHECK(thinned(1, 1) == doctest::Approx(0.405).epsilon(1e-14));
  CHECK(thinned(1, 0) == doctest::Approx(0.045).epsilon(1e-14));
  CHECK(thinned(0, 1) == doctest::Approx(0.045).epsilon(1e-14));
  CHECK(thinned(0, 0) == doctest::Approx(0.505).epsilon(1e-14));

  const auto sampled = oracle::mc_thin(joint_distribution(1, Angle{0.0}), 0.9, 1000000, 3);
  for (int x = 0; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      const double p = thinned(x, y);
      CHECK(std::abs(sampled(x, y) - p) <= 3.0 * std::sqrt(p * (1 - p) / 1e6));
    }
  }
}

TEST_CASE("mass preservation") {
  for (int N : {0, 1, 5, 12}) {
    const auto ideal = joint_distribution(N, Angle{0.6});
    for (double eta : {0.0, 0.2, 0.5, 0.83, 0.99, 1.0}) {
      CHECK(std::abs(binomial_thin(ideal, LossSpec(eta)).mass() - ideal.mass()) <= 1e-9);
    }
  }
}

TEST_CASE("loss breaks perfect correlation") {
  for (int N : {1, 2, 4}) {
    const auto ideal = joint_distribution(N, Angle{0.0});
    CHECK(mean_abs_difference(binomial_thin(ideal, LossSpec(1.0))) == 0.0);
    for (double eta : {0.1, 0.5, 0.9, 0.999}) {
      CHECK(mean_abs_difference(binomial_thin(ideal, LossSpec(eta))) > 0.0);
    }
  }
}

TEST_CASE("thinning composes multiplicatively") {
  for (int N : {1, 3, 8}) {
    const auto ideal = joint_distribution(N, Angle{1.0});
    for (auto [a, b] : {std::pair{0.9, 0.7}, std::pair{0.4, 0.95}, std::pair{0.0, 0.5}}) {
      const auto twice = binomial_thin(binomial_thin(ideal, LossSpec(a)), LossSpec(b));
      const auto once = binomial_thin(ideal, LossSpec(a * b));
      CHECK((twice.table() - once.table()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("thinning kernel is column stochastic and works on other scalars") {
  const auto kernel = thinning_matrix<long double>(10, 0.37L);
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<double>(kernel.col(n).sum()) == doctest::Approx(1.0).epsilon(1e-15));

  Eigen::MatrixXf table = Eigen::MatrixXf::Zero(3, 3);
  table(2, 2) = 1.0f;
  const Eigen::MatrixXf thinned = binomial_thin(table, 0.5f);
  CHECK(thinned(0, 0) == doctest::Approx(1.0 / 16));
  CHECK(thinned(1, 1) == doctest::Approx(4.0 / 16));
}
