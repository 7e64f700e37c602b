#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/random_graphs.hpp"
#include "tegraph/fixtures.hpp"
#include "tegraph/kernels.hpp"

using namespace tegraph;

namespace {

std::vector<CompletelyMonotone> sample_families() {
  return {CompletelyMonotone::power_exponential(1.0, 1.0), CompletelyMonotone::power_exponential(0.4, 2.0),
          CompletelyMonotone::matern(0.5, 1.5),           CompletelyMonotone::matern(0.2, 0.7),
          CompletelyMonotone::generalized_cauchy(1.0, 5.0, 0.5), CompletelyMonotone::generalized_cauchy(0.6, 1.0, 2.0),
          CompletelyMonotone::dagum(1.0, 2.0, 0.5),       CompletelyMonotone::dagum(0.5, 1.0, 0.3)};
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("closed-form values") {
    CHECK(CompletelyMonotone::power_exponential(1.0, 1.0)(2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(CompletelyMonotone::power_exponential(0.5, 0.5)(4.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(CompletelyMonotone::generalized_cauchy(1.0, 5.0, 0.5)(1.0) == doctest::Approx(std::pow(6.0, -0.5)));
    CHECK(CompletelyMonotone::dagum(1.0, 2.0, 0.5)(0.72) == doctest::Approx(1.0 - std::sqrt(1.44 / 2.44)));
    for (const auto& f : sample_families()) CHECK(f(0.0) == 1.0);
  }

  TEST_CASE("Matern of order one half is the exponential") {
    const auto m = CompletelyMonotone::matern(0.5, 1.7);
    for (double x : {1e-6, 0.01, 0.3, 1.0, 4.0, 20.0}) CHECK(m(x) == doctest::Approx(std::exp(-1.7 * x)).epsilon(1e-12));
    // far tail underflows to zero without NaN
    CHECK(m(1e4) == 0.0);
    // small-argument limit approaches psi(0) = 1
    CHECK(CompletelyMonotone::matern(0.2, 1.0)(1e-12) == doctest::Approx(1.0).epsilon(1e-2));
  }

  TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(CompletelyMonotone::power_exponential(1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::power_exponential(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::matern(0.6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::generalized_cauchy(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::dagum(1.0, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::power_exponential(1.0, 1.0)(-1.0), std::invalid_argument);
  }

  TEST_CASE("parsing family descriptions") {
    const auto d = CompletelyMonotone::parse("dagum(1, 2, 0.5)");
    CHECK(d.family() == Family::dagum);
    CHECK(d.xi() == 0.5);
    CHECK(CompletelyMonotone::parse("exponential(1,1)").family() == Family::power_exponential);
    CHECK(CompletelyMonotone::parse("cauchy(1,5,0.5)").family() == Family::generalized_cauchy);
    CHECK(CompletelyMonotone::parse("matern(0.5,1)").describe() == "matern(0.5,1)");
    CHECK_THROWS_AS(CompletelyMonotone::parse("matern(0.5)"), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::parse("gauss(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::parse("dagum 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(CompletelyMonotone::parse("dagum(1,x,0.5)"), std::invalid_argument);
  }

  TEST_CASE("property: finite differences alternate in sign (complete monotonicity)") {
    // (-1)^k Delta_h^k psi(x) >= 0 for k = 0..4
    const double h = 0.05;
    for (const auto& f : sample_families()) {
      for (double x = 0.0; x <= 6.0; x += 0.137) {
        for (int k = 0; k <= 4; ++k) {
          double diff = 0.0;
          double binom = 1.0;
          for (int j = 0; j <= k; ++j) {
            diff += ((k - j) % 2 ? -1.0 : 1.0) * binom * f(x + j * h);
            binom = binom * (k - j) / (j + 1);
          }
          const double signed_diff = (k % 2 ? -1.0 : 1.0) * diff;
          CHECK_MESSAGE(signed_diff >= -1e-12, f.describe() << " k=" << k << " x=" << x);
        }
      }
    }
  }

  TEST_CASE("worked example covariance at alpha = 1") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{});
    const auto a0 = fixtures::worked_example_point(g, "A0");
    const auto p = fixtures::worked_example_point(g, "P");
    const auto q = fixtures::worked_example_point(g, "Q");
    const auto f = CompletelyMonotone::power_exponential(1.0, 1.0);
    CHECK(kernel_compose(engine, f, a0, p) == doctest::Approx(0.4916).epsilon(2e-4));
    CHECK(kernel_compose(engine, f, a0, q) == doctest::Approx(0.2884).epsilon(2e-4));
    const std::vector<GraphPoint> pts{a0};
    const auto one = gram_matrix(engine, f, pts);
    CHECK(one.rows() == 1);
    CHECK(one(0, 0) == 1.0);
  }

  TEST_CASE("pd_check classification") {
    CHECK(pd_check(Eigen::MatrixXd::Identity(4, 4)).kind == Definiteness::strictly_pd);
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3);
    CHECK(pd_check(ones).kind == Definiteness::psd);
    Eigen::MatrixXd indefinite(2, 2);
    indefinite << 1.0, 2.0, 2.0, 1.0;
    const auto r = pd_check(indefinite);
    CHECK(r.kind == Definiteness::indefinite);
    CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 0.5, 0.2, 1.0;
    CHECK_THROWS_AS(pd_check(asym), std::invalid_argument);
  }

  TEST_CASE("property: Gram matrices of distinct points are strictly positive definite") {
    testing::Rng rng(61);
    testing::GraphShape shape;
    shape.m = 3;
    const auto g = build_equivalent_simple(testing::random_teg(rng, shape));
    const MetricEngine engine(g, MetricParams{0.5});
    const auto pts = testing::distinct_interior_points(rng, g, 20);
    for (const auto& f : sample_families()) {
      const auto report = pd_check(gram_matrix(engine, f, pts));
      CHECK_MESSAGE(report.kind == Definiteness::strictly_pd, f.describe() << " min " << report.min_eigenvalue);
    }
  }
}
