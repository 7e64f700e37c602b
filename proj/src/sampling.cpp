#include "tegraph/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace tegraph {
namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// A with A A^T = M for symmetric PSD M; tiny negative eigenvalues clamp to 0.
Eigen::MatrixXd symmetric_root(const Eigen::MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal();
}

void check_same_component(const EquivalentSimpleGraph& g, std::span<const GraphPoint> points) {
  if (points.empty()) return;
  const int comp = g.component(anchor_vertex(g, points.front()));
  for (const auto& p : points)
    if (g.component(anchor_vertex(g, p)) != comp)
      throw ComponentMismatch("sampled points must share one connected component");
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream) {
  return splitmix64(splitmix64(splitmix64(seed) ^ counter) ^ (stream * 0xd1b54a32d192ed03ULL));
}

SampleBatch sample_field(const MetricEngine& engine, std::span<const GraphPoint> points, std::size_t n_draws,
                         std::uint64_t seed) {
  if (n_draws == 0) throw std::invalid_argument("sample_field needs at least one draw");
  const auto& g = engine.graph();

  std::vector<GraphPoint> canonical;
  for (const auto& p : points) {
    check_point_time(g, p);
    canonical.push_back(canonical_point(g, p));
  }
  check_same_component(g, canonical);

  std::vector<GraphPoint> distinct;
  std::vector<Eigen::Index> column_of;
  for (const auto& p : canonical) {
    auto it = std::find(distinct.begin(), distinct.end(), p);
    column_of.push_back(static_cast<Eigen::Index>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(p);
  }

  const auto k = static_cast<Eigen::Index>(distinct.size());
  Eigen::MatrixXd K(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      const double c = engine.covariance(distinct[static_cast<std::size_t>(i)], distinct[static_cast<std::size_t>(j)]).total();
      K(i, j) = c;
      K(j, i) = c;
    }

  Eigen::LLT<Eigen::MatrixXd> llt(K);
  if (llt.info() != Eigen::Success) {
    const double scale = std::max(K.diagonal().mean(), 1e-300);
    bool ok = false;
    for (double jitter = 1e-12; jitter <= 1e-8 * (1.0 + 1e-9); jitter *= 10.0) {
      llt.compute(K + Eigen::MatrixXd::Identity(k, k) * (jitter * scale));
      if (llt.info() == Eigen::Success) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::runtime_error("covariance matrix is not positive semidefinite within the jitter ceiling");
  }
  const Eigen::MatrixXd lower = llt.matrixL();

  SampleBatch batch;
  batch.points.assign(points.begin(), points.end());
  batch.seed = seed;
  batch.draws.resize(static_cast<Eigen::Index>(n_draws), static_cast<Eigen::Index>(points.size()));
  Eigen::VectorXd z(k);
  for (std::size_t d = 0; d < n_draws; ++d) {
    Rng rng(stream_seed(seed, d, 0));
    std::normal_distribution<double> normal;
    for (Eigen::Index i = 0; i < k; ++i) z(i) = normal(rng);
    const Eigen::VectorXd x = lower * z;
    for (std::size_t c = 0; c < points.size(); ++c)
      batch.draws(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(c)) = x(column_of[c]);
  }
  return batch;
}

VariogramEstimate mc_variogram(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2,
                               std::size_t n_draws, std::uint64_t seed) {
  if (n_draws == 0) throw std::invalid_argument("mc_variogram needs at least one draw");
  const auto& g = engine.graph();
  check_point_time(g, u1);
  check_point_time(g, u2);
  const std::array<GraphPoint, 2> pts{canonical_point(g, u1), canonical_point(g, u2)};
  check_same_component(g, pts);
  if (pts[0] == pts[1]) return {};

  // Vertex layer: interpolation weights over the involved vertices.
  std::vector<VertexId> verts;
  std::array<std::vector<std::pair<std::size_t, double>>, 2> weights;
  const auto slot = [&](VertexId v) {
    auto it = std::find(verts.begin(), verts.end(), v);
    if (it == verts.end()) {
      verts.push_back(v);
      return verts.size() - 1;
    }
    return static_cast<std::size_t>(it - verts.begin());
  };
  for (std::size_t p = 0; p < 2; ++p) {
    if (pts[p].on_vertex()) {
      weights[p].push_back({slot(pts[p].vertex), 1.0});
    } else {
      const Edge& e = g.edge(*pts[p].edge);
      weights[p].push_back({slot(e.u), 1.0 - pts[p].delta});
      weights[p].push_back({slot(e.v), pts[p].delta});
    }
  }
  const auto nv = static_cast<Eigen::Index>(verts.size());
  Eigen::MatrixXd sub(nv, nv);
  for (Eigen::Index i = 0; i < nv; ++i)
    for (Eigen::Index j = 0; j < nv; ++j)
      sub(i, j) = engine.pseudoinverse().entries(static_cast<Eigen::Index>(verts[static_cast<std::size_t>(i)]),
                                                 static_cast<Eigen::Index>(verts[static_cast<std::size_t>(j)]));
  const Eigen::MatrixXd vertex_root = symmetric_root(sub);

  // Bridge layer: one group of jointly simulated Brownian paths per life.
  struct Group {
    std::vector<EdgeId> edges;
    std::vector<int> knots;
    Eigen::MatrixXd root;
  };
  std::vector<Group> groups;
  struct BridgeRef {
    std::size_t group = 0;
    std::size_t member = 0;
    int knot = 0;
    double scale = 0.0;
  };
  std::array<std::optional<BridgeRef>, 2> bridge;
  for (std::size_t p = 0; p < 2; ++p) {
    if (pts[p].on_vertex()) continue;
    const EdgeId e = *pts[p].edge;
    const int knot = static_cast<int>(std::lround(pts[p].delta * kBridgeGridSteps));
    std::size_t gi = 0;
    while (gi < groups.size() && !engine.lives().same_life(groups[gi].edges.front(), e)) ++gi;
    if (gi == groups.size()) groups.push_back({});
    auto& grp = groups[gi];
    auto it = std::find(grp.edges.begin(), grp.edges.end(), e);
    const auto member = static_cast<std::size_t>(it - grp.edges.begin());
    if (it == grp.edges.end()) grp.edges.push_back(e);
    if (knot > 0 && knot < kBridgeGridSteps) grp.knots.push_back(knot);
    bridge[p] = BridgeRef{gi, member, knot, std::sqrt(g.edge(e).length())};
  }
  for (auto& grp : groups) {
    grp.knots.push_back(kBridgeGridSteps);
    std::sort(grp.knots.begin(), grp.knots.end());
    grp.knots.erase(std::unique(grp.knots.begin(), grp.knots.end()), grp.knots.end());
    const auto ne = static_cast<Eigen::Index>(grp.edges.size());
    Eigen::MatrixXd corr(ne, ne);
    for (Eigen::Index i = 0; i < ne; ++i)
      for (Eigen::Index j = 0; j < ne; ++j)
        corr(i, j) = engine.bridge_correlation(grp.edges[static_cast<std::size_t>(i)], grp.edges[static_cast<std::size_t>(j)]);
    grp.root = symmetric_root(corr);
  }

  const bool periodic = g.time_model() == TimeModel::periodic;
  const double beta = periodic ? *engine.params().beta : 0.0;
  const double t_lo = std::min(u1.true_time.value_or(0.0), u2.true_time.value_or(0.0));
  const double t_hi = std::max(u1.true_time.value_or(0.0), u2.true_time.value_or(0.0));
  const bool first_is_lo = u1.true_time.value_or(0.0) <= u2.true_time.value_or(0.0);

  double sum_sq = 0.0;
  double sum_quad = 0.0;
  Eigen::VectorXd xi_v(nv);
  // path[group](member, knot index) = W at that knot
  std::vector<Eigen::MatrixXd> paths(groups.size());
  for (std::size_t d = 0; d < n_draws; ++d) {
    Rng rng(stream_seed(seed, d, 1));
    std::normal_distribution<double> normal;

    for (Eigen::Index i = 0; i < nv; ++i) xi_v(i) = normal(rng);
    const Eigen::VectorXd zv = vertex_root * xi_v;

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& grp = groups[gi];
      const auto ne = static_cast<Eigen::Index>(grp.edges.size());
      auto& path = paths[gi];
      path.resize(ne, static_cast<Eigen::Index>(grp.knots.size()));
      Eigen::VectorXd w = Eigen::VectorXd::Zero(ne);
      Eigen::VectorXd xi(ne);
      int prev = 0;
      for (std::size_t k = 0; k < grp.knots.size(); ++k) {
        for (Eigen::Index i = 0; i < ne; ++i) xi(i) = normal(rng);
        const double step_sd = std::sqrt(static_cast<double>(grp.knots[k] - prev) / kBridgeGridSteps);
        w += step_sd * (grp.root * xi);
        path.col(static_cast<Eigen::Index>(k)) = w;
        prev = grp.knots[k];
      }
    }

    double wiener_lo = 0.0;
    double wiener_hi = 0.0;
    if (periodic) {
      wiener_lo = std::sqrt(t_lo) * normal(rng);
      wiener_hi = wiener_lo + std::sqrt(t_hi - t_lo) * normal(rng);
    }

    std::array<double, 2> z{};
    for (std::size_t p = 0; p < 2; ++p) {
      double value = 0.0;
      for (const auto& [s, w] : weights[p]) value += w * zv(static_cast<Eigen::Index>(s));
      if (bridge[p] && bridge[p]->knot > 0 && bridge[p]->knot < kBridgeGridSteps) {
        const auto& ref = *bridge[p];
        const auto& grp = groups[ref.group];
        const auto& path = paths[ref.group];
        const auto pos = static_cast<Eigen::Index>(
            std::lower_bound(grp.knots.begin(), grp.knots.end(), ref.knot) - grp.knots.begin());
        const auto row = static_cast<Eigen::Index>(ref.member);
        const double at_end = path(row, path.cols() - 1);
        value += ref.scale * (path(row, pos) - static_cast<double>(ref.knot) / kBridgeGridSteps * at_end);
      }
      if (periodic) value += beta * (((p == 0) == first_is_lo) ? wiener_lo : wiener_hi);
      z[p] = value;
    }
    const double diff = z[0] - z[1];
    sum_sq += diff * diff;
    sum_quad += diff * diff * diff * diff;
  }

  const double n = static_cast<double>(n_draws);
  VariogramEstimate out;
  out.estimate = sum_sq / n;
  const double var = std::max(sum_quad / n - out.estimate * out.estimate, 0.0);
  out.standard_error = std::sqrt(var / n);
  return out;
}

}  // namespace tegraph
