#include <doctest.h>

#include <cmath>

#include "support/random_graphs.hpp"
#include "tegraph/fixtures.hpp"
#include "tegraph/sampling.hpp"

using namespace tegraph;

namespace {

EquivalentSimpleGraph unit_path() {
  TimeEvolvingGraph teg;
  teg.m = 1;
  teg.layers = {Layer{0, {"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 1.0}}}};
  return build_equivalent_simple(teg);
}

double sample_cov(const Eigen::MatrixXd& draws, Eigen::Index i, Eigen::Index j) {
  const double n = static_cast<double>(draws.rows());
  const double mi = draws.col(i).mean(), mj = draws.col(j).mean();
  return ((draws.col(i).array() - mi) * (draws.col(j).array() - mj)).sum() / (n - 1);
}

}  // namespace

TEST_SUITE("sampling") {
  TEST_CASE("stream seeds are deterministic and spread") {
    CHECK(stream_seed(1, 2, 3) == stream_seed(1, 2, 3));
    CHECK(stream_seed(1, 2, 3) != stream_seed(1, 3, 3));
    CHECK(stream_seed(1, 2, 3) != stream_seed(2, 2, 3));
    CHECK(stream_seed(1, 2, 3) != stream_seed(1, 2, 4));
  }

  TEST_CASE("same seed reproduces draws, duplicate points share values") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{0.6});
    const std::vector<GraphPoint> pts{fixtures::worked_example_point(g, "P"), fixtures::worked_example_point(g, "Q"),
                                      fixtures::worked_example_point(g, "P"),
                                      GraphPoint::on_edge(*g.find_spatial_edge("A", "B", 0), 0.0)};
    const auto a = sample_field(engine, pts, 50, 9);
    const auto b = sample_field(engine, pts, 50, 9);
    const auto c = sample_field(engine, pts, 50, 10);
    CHECK(a.draws == b.draws);
    CHECK(a.draws != c.draws);
    CHECK(a.draws.col(0) == a.draws.col(2));
    // draws are independent of the batch size: first rows coincide
    const auto longer = sample_field(engine, pts, 80, 9);
    CHECK(longer.draws.topRows(50) == a.draws);
    CHECK_THROWS_AS(sample_field(engine, pts, 0, 1), std::invalid_argument);
  }

  TEST_CASE("vertex variance matches the pseudoinverse diagonal") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{});
    const VertexId v = *g.find_vertex("B", 1);
    const std::vector<GraphPoint> pts{GraphPoint::at_vertex(v)};
    const std::size_t n = 100000;
    const auto batch = sample_field(engine, pts, n, 2024);
    const double sigma2 = engine.pseudoinverse().entries(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v));
    const double var = sample_cov(batch.draws, 0, 0);
    const double se = sigma2 * std::sqrt(2.0 / static_cast<double>(n - 1));
    CHECK(std::abs(var - sigma2) < 3 * se);
  }

  TEST_CASE("empirical covariance error shrinks with more draws") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{0.6});
    std::vector<GraphPoint> pts;
    for (const char* name : {"A0", "P", "Q"}) pts.push_back(fixtures::worked_example_point(g, name));
    Eigen::MatrixXd K(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) K(i, j) = engine.covariance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]).total();
    const auto error = [&](std::size_t n) {
      double total = 0.0;
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto d = sample_field(engine, pts, n, 100 + seed).draws;
        Eigen::MatrixXd S(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) S(i, j) = sample_cov(d, i, j);
        total += (S - K).norm();
      }
      return total / 8.0;
    };
    const double coarse = error(1000);
    const double fine = error(16000);
    // expected ratio 1/4
    CHECK(fine < 0.5 * coarse);
  }

  TEST_CASE("points on edges of different lives share only the vertex covariance") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{0.9});
    const auto p = GraphPoint::on_edge(*g.find_spatial_edge("A", "B", 0), 0.5);
    const auto q = GraphPoint::on_edge(*g.find_spatial_edge("B", "C", 0), 0.5);
    REQUIRE_FALSE(engine.lives().same_life(*p.edge, *q.edge));
    const std::vector<GraphPoint> pts{p, q};
    const std::size_t n = 100000;
    const auto d = sample_field(engine, pts, n, 77).draws;
    const auto kpp = engine.covariance(p, p).total(), kqq = engine.covariance(q, q).total();
    const auto kpq = engine.covariance(p, q);
    CHECK(kpq.bridge == 0.0);
    const double se = std::sqrt((kpp * kqq + kpq.vertex * kpq.vertex) / static_cast<double>(n));
    CHECK(std::abs(sample_cov(d, 0, 1) - kpq.vertex) < 3 * se);
  }

  TEST_CASE("pathwise variogram: series law on a unit path") {
    const auto g = unit_path();
    const MetricEngine engine(g, MetricParams{});
    const auto est = mc_variogram(engine, GraphPoint::at_vertex(0), GraphPoint::at_vertex(2), 200000, 5);
    CHECK(std::abs(est.estimate - 2.0) < 3 * est.standard_error);
    CHECK(est.standard_error > 0.0);
    const auto same = mc_variogram(engine, GraphPoint::at_vertex(1), GraphPoint::on_edge(0, 1.0), 10, 5);
    CHECK(same.estimate == 0.0);
  }

  TEST_CASE("pathwise variogram on the worked example") {
    const auto g = build_equivalent_simple(fixtures::worked_example(1.0));
    const MetricEngine engine(g, MetricParams{0.6});
    const auto a0 = fixtures::worked_example_point(g, "A0");
    const auto p = fixtures::worked_example_point(g, "P");
    const auto q = fixtures::worked_example_point(g, "Q");
    const double allowance = 2.0 / kBridgeGridSteps;
    const auto ap = mc_variogram(engine, a0, p, 200000, 1);
    CHECK(std::abs(ap.estimate - 0.7101) < 3 * ap.standard_error + allowance);
    const auto pq = mc_variogram(engine, p, q, 200000, 2);
    CHECK(std::abs(pq.estimate - engine.distance(p, q).value) < 3 * pq.standard_error + allowance);
  }

  TEST_CASE("pathwise variogram on the periodic ladder") {
    const auto g = build_equivalent_simple(fixtures::ladder(8, 1.0));
    MetricParams params;
    params.rho = 0.45;
    params.beta = 0.5;
    const MetricEngine engine(g, params);
    const auto a = fixtures::ladder_point(g, 1.0);
    const auto b = fixtures::ladder_point(g, 6.0);
    const auto est = mc_variogram(engine, a, b, 200000, 3);
    CHECK(std::abs(est.estimate - engine.distance(a, b).value) < 3 * est.standard_error + 2.0 / kBridgeGridSteps);
  }
}
