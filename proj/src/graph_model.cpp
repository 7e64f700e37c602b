#include "tegraph/graph_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tegraph {
namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::string vertex_key(std::string_view label, int time) {
  std::string key(label);
  key += '\x1f';
  key += std::to_string(time);
  return key;
}

std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool positive_weight(double w) { return std::isfinite(w) && w > 0.0; }

// Temporal edges must join copies of one label on adjacent layers.
bool markov_adjacent(TimeModel model, int m, int t1, int t2) {
  const int gap = std::abs(t1 - t2);
  if (model == TimeModel::linear) return gap == 1;
  return gap % m == 1 || gap % m == m - 1;
}

}  // namespace

std::string_view to_string(TimeModel model) {
  return model == TimeModel::linear ? "linear" : "periodic";
}

std::string display_name(const Vertex& v) { return v.label + std::to_string(v.time); }

ValidationReport validate_layer(const Layer& layer) {
  ValidationReport report;
  const std::string where = "layer " + std::to_string(layer.time) + ": ";

  std::map<std::string, std::size_t> index;
  for (const auto& label : layer.labels) {
    if (label.empty()) {
      report.violations.push_back(where + "empty label");
      continue;
    }
    if (!index.emplace(label, index.size()).second)
      report.violations.push_back(where + "duplicate label " + label);
  }

  DisjointSets sets(index.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : layer.edges) {
    const std::string name = "(" + e.u + "," + e.v + ")";
    if (e.u == e.v) {
      report.violations.push_back(where + "self-loop " + name);
      continue;
    }
    const auto iu = index.find(e.u);
    const auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) {
      report.violations.push_back(where + "edge " + name + " references an unknown vertex");
      continue;
    }
    if (!positive_weight(e.weight)) {
      std::ostringstream msg;
      msg << where << "non-positive weight " << e.weight << " on edge " << name;
      report.violations.push_back(msg.str());
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.emplace(key.first, key.second).second)
      report.violations.push_back(where + "parallel edge " + name);
    sets.unite(iu->second, iv->second);
  }

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < index.size(); ++i) roots.insert(sets.find(i));
  report.layer_connected.emplace_back(layer.time, roots.size() <= 1);
  return report;
}

ValidationReport validate(const TimeEvolvingGraph& teg) {
  ValidationReport report;
  if (teg.m < 1) report.violations.push_back("number of layers must be at least 1");
  if (teg.time_model == TimeModel::periodic && teg.m < 3)
    report.violations.push_back("periodic graphs need at least 3 layers");

  std::set<int> times;
  std::map<int, std::set<std::string>> labels_at;
  for (const auto& layer : teg.layers) {
    if (layer.time < 0 || layer.time >= teg.m)
      report.violations.push_back("layer time " + std::to_string(layer.time) + " outside [0, " +
                                  std::to_string(teg.m) + ")");
    if (!times.insert(layer.time).second)
      report.violations.push_back("layer " + std::to_string(layer.time) + " declared twice");
    auto sub = validate_layer(layer);
    report.violations.insert(report.violations.end(), sub.violations.begin(), sub.violations.end());
    report.layer_connected.insert(report.layer_connected.end(), sub.layer_connected.begin(),
                                  sub.layer_connected.end());
    labels_at[layer.time].insert(layer.labels.begin(), layer.labels.end());
  }

  if (const auto* markov = std::get_if<MarkovComplete>(&teg.temporal)) {
    if (!positive_weight(markov->alpha))
      report.violations.push_back("temporal weight alpha must be positive");
  } else {
    const auto& explicit_edges = std::get<ExplicitTemporal>(teg.temporal).edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : explicit_edges) {
      const std::string name = "(" + display_name(e.u) + "," + display_name(e.v) + ")";
      const auto exists = [&](const Vertex& v) {
        auto it = labels_at.find(v.time);
        return it != labels_at.end() && it->second.contains(v.label);
      };
      if (!exists(e.u) || !exists(e.v)) {
        report.violations.push_back("temporal edge " + name + " references an unknown vertex");
        continue;
      }
      if (e.u.label != e.v.label)
        report.violations.push_back("temporal edge " + name + " joins different labels");
      if (e.u.time == e.v.time) {
        report.violations.push_back("temporal edge " + name + " stays within one layer");
        continue;
      }
      if (teg.m >= 1 && !markov_adjacent(teg.time_model, teg.m, e.u.time, e.v.time))
        report.violations.push_back("temporal edge " + name + " does not join adjacent layers");
      if (!positive_weight(e.weight))
        report.violations.push_back("temporal edge " + name + " has non-positive weight");
      if (!seen.insert(std::minmax(e.u, e.v)).second)
        report.violations.push_back("parallel temporal edge " + name);
    }
  }
  return report;
}

std::vector<EdgeId> EquivalentSimpleGraph::spatial_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i)
    if (edges_[i].kind == EdgeKind::spatial) out.push_back(i);
  return out;
}

std::vector<EdgeId> EquivalentSimpleGraph::temporal_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i)
    if (edges_[i].kind == EdgeKind::temporal) out.push_back(i);
  return out;
}

std::optional<VertexId> EquivalentSimpleGraph::find_vertex(std::string_view label, int time) const {
  auto it = vertex_index_.find(vertex_key(label, time));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> EquivalentSimpleGraph::find_edge(VertexId a, VertexId b) const {
  auto it = edge_index_.find(edge_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> EquivalentSimpleGraph::find_spatial_edge(std::string_view a, std::string_view b,
                                                               int time) const {
  const auto va = find_vertex(a, time);
  const auto vb = find_vertex(b, time);
  if (!va || !vb) return std::nullopt;
  return find_edge(*va, *vb);
}

int EquivalentSimpleGraph::start_layer(EdgeId id) const {
  const Edge& e = edge(id);
  const int tu = vertices_[e.u].time;
  if (e.kind == EdgeKind::spatial) return tu;
  return runs_forward(id) ? tu : vertices_[e.v].time;
}

bool EquivalentSimpleGraph::runs_forward(EdgeId id) const {
  const Edge& e = edge(id);
  if (e.kind == EdgeKind::spatial) return true;
  // u precedes v in the order, so only the periodic wrap edge (0, m-1)
  // runs backwards from u.
  return vertices_[e.v].time - vertices_[e.u].time == 1;
}

std::string EquivalentSimpleGraph::edge_name(EdgeId id) const {
  const Edge& e = edge(id);
  return "(" + display_name(vertices_[e.u]) + "," + display_name(vertices_[e.v]) + ")";
}

EquivalentSimpleGraph build_equivalent_simple(const TimeEvolvingGraph& teg) {
  const auto report = validate(teg);
  if (!report.valid()) {
    std::string msg = "invalid time-evolving graph:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw GraphError(msg);
  }

  EquivalentSimpleGraph g;
  g.time_model_ = teg.time_model;
  g.m_ = teg.m;

  for (const auto& layer : teg.layers)
    for (const auto& label : layer.labels) g.vertices_.push_back(Vertex{layer.time, label});
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (VertexId i = 0; i < g.vertices_.size(); ++i)
    g.vertex_index_.emplace(vertex_key(g.vertices_[i].label, g.vertices_[i].time), i);

  struct Pending {
    VertexId u, v;
    double weight;
    EdgeKind kind;
  };
  std::vector<Pending> pending;
  const auto id_of = [&](std::string_view label, int time) { return *g.find_vertex(label, time); };

  for (const auto& layer : teg.layers)
    for (const auto& e : layer.edges) {
      const auto [a, b] = ordered(id_of(e.u, layer.time), id_of(e.v, layer.time));
      pending.push_back({a, b, e.weight, EdgeKind::spatial});
    }

  if (const auto* markov = std::get_if<MarkovComplete>(&teg.temporal)) {
    const int last = teg.time_model == TimeModel::periodic ? teg.m : teg.m - 1;
    for (int t = 0; t < last; ++t) {
      const int next = (t + 1) % teg.m;
      for (const auto& v : g.vertices_) {
        if (v.time != t) continue;
        if (const auto w = g.find_vertex(v.label, next)) {
          const auto [a, b] = ordered(id_of(v.label, t), *w);
          // Adjacent layers are one step apart, so alpha * |dt|^-1 == alpha.
          pending.push_back({a, b, markov->alpha, EdgeKind::temporal});
        }
      }
    }
  } else {
    for (const auto& e : std::get<ExplicitTemporal>(teg.temporal).edges) {
      const auto [a, b] = ordered(id_of(e.u.label, e.u.time), id_of(e.v.label, e.v.time));
      pending.push_back({a, b, e.weight, EdgeKind::temporal});
    }
  }

  std::sort(pending.begin(), pending.end(),
            [](const Pending& x, const Pending& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  for (const auto& p : pending) {
    if (!g.edge_index_.emplace(edge_key(p.u, p.v), g.edges_.size()).second)
      throw GraphError("duplicate edge between " + display_name(g.vertices_[p.u]) + " and " +
                       display_name(g.vertices_[p.v]));
    g.edges_.push_back(Edge{p.u, p.v, p.weight, p.kind});
  }

  DisjointSets sets(g.vertices_.size());
  for (const auto& e : g.edges_) sets.unite(e.u, e.v);
  std::map<std::size_t, int> root_to_component;
  g.component_.resize(g.vertices_.size());
  for (VertexId i = 0; i < g.vertices_.size(); ++i) {
    auto [it, inserted] = root_to_component.emplace(sets.find(i), static_cast<int>(root_to_component.size()));
    g.component_[i] = it->second;
  }
  g.component_count_ = root_to_component.size();
  return g;
}

GraphPoint GraphPoint::at_vertex(VertexId v, std::optional<double> true_time) {
  GraphPoint p;
  p.vertex = v;
  p.true_time = true_time;
  return p;
}

GraphPoint GraphPoint::on_edge(EdgeId e, double delta, std::optional<double> true_time) {
  GraphPoint p;
  p.edge = e;
  p.delta = delta;
  p.true_time = true_time;
  return p;
}

GraphPoint canonical_point(const EquivalentSimpleGraph& g, const GraphPoint& p) {
  if (p.on_vertex()) {
    if (p.vertex >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
    return GraphPoint::at_vertex(p.vertex, p.true_time);
  }
  if (*p.edge >= g.edge_count()) throw std::invalid_argument("edge id out of range");
  if (!(p.delta >= 0.0 && p.delta <= 1.0))
    throw std::invalid_argument("relative edge coordinate must lie in [0,1]");
  const Edge& e = g.edge(*p.edge);
  if (p.delta == 0.0) return GraphPoint::at_vertex(e.u, p.true_time);
  if (p.delta == 1.0) return GraphPoint::at_vertex(e.v, p.true_time);
  return p;
}

bool same_location(const EquivalentSimpleGraph& g, const GraphPoint& a, const GraphPoint& b) {
  return canonical_point(g, a) == canonical_point(g, b);
}

VertexId anchor_vertex(const EquivalentSimpleGraph& g, const GraphPoint& p) {
  return p.on_vertex() ? p.vertex : g.edge(*p.edge).u;
}

void check_point_time(const EquivalentSimpleGraph& g, const GraphPoint& p) {
  if (g.time_model() == TimeModel::linear) {
    if (p.true_time) throw std::invalid_argument("true time is only defined in the periodic model");
    return;
  }
  if (!p.true_time) throw std::invalid_argument("periodic points need a true time");
  const double t = *p.true_time;
  if (!(std::isfinite(t) && t >= 0.0)) throw std::invalid_argument("true time must be non-negative");

  const int m = g.layer_count();
  const auto layer_of = [m](double time) {
    const auto whole = static_cast<long long>(std::floor(time + 1e-9));
    return static_cast<int>(((whole % m) + m) % m);
  };

  if (p.on_vertex() || g.edge(*p.edge).kind == EdgeKind::spatial) {
    const int layer = g.vertex(anchor_vertex(g, p)).time;
    if (layer_of(t) != layer)
      throw std::invalid_argument("true time " + std::to_string(t) + " is not on layer " +
                                  std::to_string(layer));
    return;
  }

  // Interior of a temporal edge: t = (start of the step) + fraction travelled.
  const EdgeId id = *p.edge;
  const double fraction = g.runs_forward(id) ? p.delta : 1.0 - p.delta;
  const double start = t - fraction;
  const double whole = std::round(start);
  if (std::abs(start - whole) > 1e-9 * std::max(1.0, t) || layer_of(whole) != g.start_layer(id))
    throw std::invalid_argument("true time " + std::to_string(t) + " does not match position on " +
                                g.edge_name(id));
}

std::string describe(const EquivalentSimpleGraph& g, const GraphPoint& p) {
  std::ostringstream out;
  if (p.on_vertex())
    out << display_name(g.vertex(p.vertex));
  else
    out << g.edge_name(*p.edge) << "@" << p.delta;
  if (p.true_time) out << " t=" << *p.true_time;
  return out.str();
}

}  // namespace tegraph
