#include "tegraph/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tegraph {

double brownian_bridge_cov(double d1, double d2) {
  if (!(d1 >= 0.0 && d1 <= 1.0 && d2 >= 0.0 && d2 <= 1.0))
    throw std::invalid_argument("bridge coordinates must lie in [0,1]");
  return std::min(d1, d2) - d1 * d2;
}

TemporalKernelSpec lifespan_kernel(TimeModel model, const MetricParams& params, const Lifespan& span, int m) {
  if (model == TimeModel::linear) return Ar1Kernel{params.lambda};
  if (span.full_cycle) {
    if (!params.rho) throw std::invalid_argument("periodic full-cycle lifespans need rho");
    return CirculantKernel(*params.rho, m);
  }
  return BlockAr1Kernel{params.lambda, span.times, m};
}

MetricEngine::MetricEngine(EquivalentSimpleGraph graph, MetricParams params)
    : graph_(std::move(graph)), params_(params) {
  if (!(params_.lambda > -1.0 && params_.lambda < 1.0))
    throw std::invalid_argument("lambda must lie in (-1, 1)");
  if (graph_.time_model() == TimeModel::linear) {
    if (params_.rho || params_.beta)
      throw std::invalid_argument("rho and beta belong to the periodic model; linear graphs take lambda only");
  } else {
    if (!params_.beta || !(*params_.beta > 0.0))
      throw std::invalid_argument("periodic graphs need beta > 0");
    if (!params_.rho) throw std::invalid_argument("periodic graphs need rho in [0, 0.5)");
    circulant_.emplace(*params_.rho, graph_.layer_count());
  }
  pinv_ = tegraph::pseudoinverse(laplacian(graph_));
  lives_ = LifePartition(graph_);
}

double MetricEngine::bridge_correlation(EdgeId a, EdgeId b) const {
  if (!lives_.same_life(a, b)) return 0.0;
  if (a == b) return 1.0;
  if (params_.coupling == BridgeCoupling::independent) return 0.0;

  const Life& life = lives_.life_of(a);
  const int ta = graph_.vertex(graph_.edge(a).u).time;
  const int tb = graph_.vertex(graph_.edge(b).u).time;
  if (graph_.time_model() == TimeModel::linear) return ar1(ta - tb, params_.lambda);
  if (life.span.full_cycle) return circulant_->at(ta, tb);
  return block_ar1(ta, tb, params_.lambda, life.span.times, graph_.layer_count());
}

MetricEngine::Resolved MetricEngine::resolve(const GraphPoint& p) const {
  check_point_time(graph_, p);
  Resolved r;
  r.point = canonical_point(graph_, p);
  r.time = p.true_time.value_or(0.0);
  if (r.point.on_vertex()) {
    r.a = r.b = r.point.vertex;
    return r;
  }
  const Edge& e = graph_.edge(*r.point.edge);
  r.a = e.u;
  r.b = e.v;
  r.delta = r.point.delta;
  r.wa = 1.0 - r.delta;
  r.wb = r.delta;
  r.edge = r.point.edge;
  return r;
}

void MetricEngine::require_same_component(const Resolved& x, const Resolved& y) const {
  if (graph_.component(x.a) != graph_.component(y.a))
    throw ComponentMismatch("points " + describe(graph_, x.point) + " and " + describe(graph_, y.point) +
                            " lie in different components");
}

double MetricEngine::vertex_cov(const Resolved& x, const Resolved& y) const {
  const auto& L = pinv_.entries;
  const auto at = [&](VertexId i, VertexId j) {
    return L(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  // delta_1^T L+[(a1,b1),(a2,b2)] delta_2
  return x.wa * y.wa * at(x.a, y.a) + x.wa * y.wb * at(x.a, y.b) + x.wb * y.wa * at(x.b, y.a) +
         x.wb * y.wb * at(x.b, y.b);
}

double MetricEngine::bridge_cov(const Resolved& x, const Resolved& y) const {
  if (!x.edge || !y.edge) return 0.0;
  if (!lives_.same_life(*x.edge, *y.edge)) return 0.0;
  const double lx = graph_.edge(*x.edge).length();
  const double ly = graph_.edge(*y.edge).length();
  return std::sqrt(lx * ly) * bridge_correlation(*x.edge, *y.edge) * brownian_bridge_cov(x.delta, y.delta);
}

CovarianceTerms MetricEngine::covariance(const GraphPoint& u1, const GraphPoint& u2) const {
  const Resolved x = resolve(u1);
  const Resolved y = resolve(u2);
  require_same_component(x, y);
  CovarianceTerms terms;
  terms.vertex = vertex_cov(x, y);
  terms.bridge = bridge_cov(x, y);
  if (graph_.time_model() == TimeModel::periodic) terms.wiener = *params_.beta * *params_.beta * std::min(x.time, y.time);
  return terms;
}

DistanceResult MetricEngine::distance(const GraphPoint& u1, const GraphPoint& u2) const {
  const Resolved x = resolve(u1);
  const Resolved y = resolve(u2);
  require_same_component(x, y);
  DistanceResult out;
  if (x.point == y.point) return out;

  // Quadratic form of L+ on the difference of the two interpolation vectors.
  std::map<VertexId, double> diff;
  diff[x.a] += x.wa;
  diff[x.b] += x.wb;
  diff[y.a] -= y.wa;
  diff[y.b] -= y.wb;
  const auto& L = pinv_.entries;
  double vertex = 0.0;
  for (const auto& [i, ci] : diff)
    for (const auto& [j, cj] : diff)
      vertex += ci * cj * L(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  out.vertex_part = vertex;

  out.bridge_part = bridge_cov(x, x) + bridge_cov(y, y) - 2.0 * bridge_cov(x, y);
  if (graph_.time_model() == TimeModel::periodic) out.wiener_part = *params_.beta * *params_.beta * std::abs(x.time - y.time);
  out.value = out.vertex_part + out.bridge_part + out.wiener_part;

  if (out.value <= 1e-12)
    throw DegenerateDistance("distinct points " + describe(graph_, x.point) + " and " + describe(graph_, y.point) +
                             " are at distance " + std::to_string(out.value) + "; check for degenerate weights");
  return out;
}

double cov_z_linear(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2) {
  if (engine.graph().time_model() != TimeModel::linear) throw std::invalid_argument("graph is not linear-time");
  return engine.covariance(u1, u2).total();
}

double cov_z_periodic(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2) {
  if (engine.graph().time_model() != TimeModel::periodic) throw std::invalid_argument("graph is not periodic");
  return engine.covariance(u1, u2).total();
}

DistanceResult dist(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2) {
  return engine.distance(u1, u2);
}

AuditReport semimetric_audit(const MetricEngine& engine, std::span<const GraphPoint> points,
                             double symmetry_tolerance) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("semi-metric audit needs at least three points");
  const auto& g = engine.graph();

  AuditReport report;
  report.points = n;
  std::vector<double> d(n * n, 0.0);
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool same = same_location(g, points[i], points[j]);
      double value = 0.0;
      bool degenerate = false;
      try {
        value = engine.distance(points[i], points[j]).value;
      } catch (const DegenerateDistance&) {
        degenerate = true;
      }
      at(i, j) = value;
      if (i < j) ++report.pairs_checked;
      if (value < 0.0) ++report.negative;
      if (degenerate || (value == 0.0) != same) ++report.identity_failures;
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(at(i, j) - at(j, i)) > symmetry_tolerance * std::max(1.0, std::abs(at(i, j)))) ++report.asymmetric;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        ++report.triples_checked;
        const double legs = at(i, j) + at(j, k);
        const double direct = at(i, k);
        if (legs < direct - 1e-12 * std::max(1.0, direct))
          report.triangle_violations.push_back({i, j, k, legs, direct});
      }
  return report;
}

}  // namespace tegraph
