// Hand-rolled generators for property tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tegraph/graph_model.hpp"
#include "tegraph/spectral.hpp"

namespace tegraph::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct GraphShape {
  TimeModel model = TimeModel::linear;
  int m = 3;
  int labels = 5;
  double label_presence = 0.8;
  double extra_edge = 0.3;
  double w_lo = 0.3;
  double w_hi = 3.0;
  double alpha = 1.0;
};

inline std::string label_name(int i) { return std::string(1, static_cast<char>('A' + i)); }

/// Connected by construction: label A is on every layer, each layer gets a
/// random spanning tree over its labels, and temporal edges are
/// markov_complete.
inline TimeEvolvingGraph random_teg(Rng& rng, const GraphShape& shape) {
  TimeEvolvingGraph teg;
  teg.time_model = shape.model;
  teg.m = shape.m;
  for (int t = 0; t < shape.m; ++t) {
    Layer layer{t, {}, {}};
    for (int i = 0; i < shape.labels; ++i)
      if (i == 0 || coin(rng, shape.label_presence)) layer.labels.push_back(label_name(i));
    std::vector<std::string> order = layer.labels;
    std::shuffle(order.begin() + 1, order.end(), rng);
    std::vector<std::pair<std::string, std::string>> used;
    const auto add = [&](const std::string& a, const std::string& b) {
      const auto key = std::minmax(a, b);
      if (std::find(used.begin(), used.end(), std::pair{key.first, key.second}) != used.end()) return;
      used.emplace_back(key.first, key.second);
      layer.edges.push_back({a, b, uniform(rng, shape.w_lo, shape.w_hi)});
    };
    for (std::size_t i = 1; i < order.size(); ++i)
      add(order[i], order[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (coin(rng, shape.extra_edge)) add(order[i], order[j]);
    teg.layers.push_back(std::move(layer));
  }
  teg.temporal = MarkovComplete{shape.alpha};
  return teg;
}

/// Random location with a consistent true time in the periodic model.
/// `endpoint_chance` puts delta exactly at 0 or 1 now and then.
inline GraphPoint random_point(Rng& rng, const EquivalentSimpleGraph& g, double vertex_chance = 0.2,
                               double endpoint_chance = 0.05) {
  const bool periodic = g.time_model() == TimeModel::periodic;
  const int m = g.layer_count();
  const double cycle = periodic ? static_cast<double>(m * uniform_int(rng, 0, 2)) : 0.0;
  if (coin(rng, vertex_chance)) {
    const auto v = static_cast<VertexId>(uniform_int(rng, 0, static_cast<int>(g.vertex_count()) - 1));
    std::optional<double> t;
    if (periodic) t = g.vertex(v).time + cycle;
    return GraphPoint::at_vertex(v, t);
  }
  const auto e = static_cast<EdgeId>(uniform_int(rng, 0, static_cast<int>(g.edge_count()) - 1));
  double delta = uniform(rng, 0.0, 1.0);
  if (coin(rng, endpoint_chance)) delta = coin(rng, 0.5) ? 0.0 : 1.0;
  std::optional<double> t;
  if (periodic) {
    const Edge& edge = g.edge(e);
    if (edge.kind == EdgeKind::spatial) {
      t = g.vertex(edge.u).time + cycle + uniform(rng, 0.0, 0.999);
    } else {
      const double fraction = g.runs_forward(e) ? delta : 1.0 - delta;
      t = g.start_layer(e) + cycle + fraction;
    }
  }
  return GraphPoint::on_edge(e, delta, t);
}

inline std::vector<GraphPoint> random_points(Rng& rng, const EquivalentSimpleGraph& g, std::size_t n) {
  std::vector<GraphPoint> out;
  while (out.size() < n) out.push_back(random_point(rng, g));
  return out;
}

/// Distinct interior points on spatial or temporal edges, one per edge draw,
/// kept away from the endpoints.
inline std::vector<GraphPoint> distinct_interior_points(Rng& rng, const EquivalentSimpleGraph& g, std::size_t n) {
  std::vector<GraphPoint> out;
  while (out.size() < n) {
    auto p = random_point(rng, g, 0.0, 0.0);
    const auto fraction = [&] { return g.runs_forward(*p.edge) ? p.delta : 1.0 - p.delta; };
    const bool temporal = g.edge(*p.edge).kind == EdgeKind::temporal;
    const double step_start = (p.true_time && temporal) ? *p.true_time - fraction() : 0.0;
    p.delta = 0.1 + 0.8 * p.delta;
    if (p.true_time && temporal) p.true_time = step_start + fraction();
    out.push_back(p);
  }
  return out;
}

/// Random connected weighted graph on n vertices: spanning tree plus extras.
inline std::vector<WeightedPair> random_connected_pairs(Rng& rng, std::size_t n, double extra) {
  std::vector<WeightedPair> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1));
    edges.push_back({j, i, uniform(rng, 0.2, 5.0)});
    used[i][j] = used[j][i] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used[i][j] && coin(rng, extra)) edges.push_back({i, j, uniform(rng, 0.2, 5.0)});
  return edges;
}

/// (L + J/n)^-1 - J/n for a connected Laplacian.
inline Eigen::MatrixXd deflation_pseudoinverse(const Eigen::MatrixXd& L) {
  const auto n = L.rows();
  const Eigen::MatrixXd J = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  return (L + J).inverse() - J;
}

/// Dense Laplacian assembled straight from an edge list.
inline Eigen::MatrixXd dense_laplacian(std::size_t n, const std::vector<WeightedPair>& edges) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& e : edges) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    L(u, u) += e.weight;
    L(v, v) += e.weight;
    L(u, v) -= e.weight;
    L(v, u) -= e.weight;
  }
  return L;
}

}  // namespace tegraph::testing
