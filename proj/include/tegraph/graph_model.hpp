#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace tegraph {

/// Thrown when a graph description violates a structural invariant.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TimeModel { linear, periodic };

std::string_view to_string(TimeModel model);

/// A labelled vertex living in layer `time`. Ordered by (time, label).
struct Vertex {
  int time = 0;
  std::string label;

  auto operator<=>(const Vertex&) const = default;
};

std::string display_name(const Vertex& v);

struct LayerEdge {
  std::string u;
  std::string v;
  double weight = 1.0;
};

/// One static slice of a time-evolving graph.
struct Layer {
  int time = 0;
  std::vector<std::string> labels;
  std::vector<LayerEdge> edges;
};

/// Connect every label present on two adjacent layers with weight alpha.
struct MarkovComplete {
  double alpha = 1.0;
};

struct ExplicitTemporalEdge {
  Vertex u;
  Vertex v;
  double weight = 1.0;
};

struct ExplicitTemporal {
  std::vector<ExplicitTemporalEdge> edges;
};

using TemporalPolicy = std::variant<MarkovComplete, ExplicitTemporal>;

struct TimeEvolvingGraph {
  TimeModel time_model = TimeModel::linear;
  int m = 1;
  std::vector<Layer> layers;
  TemporalPolicy temporal = MarkovComplete{};
};

struct ValidationReport {
  std::vector<std::string> violations;
  /// Per-layer connectivity, informational only.
  std::vector<std::pair<int, bool>> layer_connected;

  [[nodiscard]] bool valid() const { return violations.empty(); }
};

/// Simplicity and weight positivity of a single layer. Connectivity is
/// reported but never a violation.
ValidationReport validate_layer(const Layer& layer);

/// Layer checks plus layer-count, time-index and temporal-edge checks.
ValidationReport validate(const TimeEvolvingGraph& teg);

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class EdgeKind { spatial, temporal };

/// Undirected edge stored with `u < v` in the vertex order.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;
  EdgeKind kind = EdgeKind::spatial;

  [[nodiscard]] double length() const { return 1.0 / weight; }
};

/// The flattened graph: all layers plus the temporal edges joining them.
/// Immutable once built.
class EquivalentSimpleGraph {
 public:
  [[nodiscard]] TimeModel time_model() const { return time_model_; }
  [[nodiscard]] int layer_count() const { return m_; }

  [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] const Vertex& vertex(VertexId id) const { return vertices_.at(id); }
  [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(id); }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] std::vector<EdgeId> spatial_edges() const;
  [[nodiscard]] std::vector<EdgeId> temporal_edges() const;

  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view label, int time) const;
  [[nodiscard]] std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  /// Spatial edge joining two labels on layer `time`, if present.
  [[nodiscard]] std::optional<EdgeId> find_spatial_edge(std::string_view a, std::string_view b,
                                                        int time) const;

  [[nodiscard]] int component(VertexId id) const { return component_.at(id); }
  [[nodiscard]] std::size_t component_count() const { return component_count_; }
  [[nodiscard]] std::span<const int> component_ids() const { return component_; }

  /// Layer a temporal edge leaves from when walked forward in time, and
  /// whether its first stored endpoint `u` is that starting vertex.
  /// Spatial edges return their own layer.
  [[nodiscard]] int start_layer(EdgeId id) const;
  [[nodiscard]] bool runs_forward(EdgeId id) const;

  std::string edge_name(EdgeId id) const;

 private:
  friend EquivalentSimpleGraph build_equivalent_simple(const TimeEvolvingGraph& teg);

  TimeModel time_model_ = TimeModel::linear;
  int m_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> component_;
  std::size_t component_count_ = 0;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

/// Flatten a time-evolving graph. Throws GraphError when `validate` fails.
EquivalentSimpleGraph build_equivalent_simple(const TimeEvolvingGraph& teg);

/// A location on the graph: a vertex, or an edge plus a relative coordinate
/// measured from the edge's first endpoint. `true_time` is set only in the
/// periodic model.
struct GraphPoint {
  std::optional<EdgeId> edge;
  VertexId vertex = 0;
  double delta = 0.0;
  std::optional<double> true_time;

  static GraphPoint at_vertex(VertexId v, std::optional<double> true_time = std::nullopt);
  static GraphPoint on_edge(EdgeId e, double delta, std::optional<double> true_time = std::nullopt);

  [[nodiscard]] bool on_vertex() const { return !edge.has_value(); }

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Rewrite endpoint coordinates (delta 0 or 1) as vertex points.
/// Throws std::invalid_argument when delta is outside [0,1].
GraphPoint canonical_point(const EquivalentSimpleGraph& g, const GraphPoint& p);

bool same_location(const EquivalentSimpleGraph& g, const GraphPoint& a, const GraphPoint& b);

/// The vertex whose component the point belongs to.
VertexId anchor_vertex(const EquivalentSimpleGraph& g, const GraphPoint& p);

/// Checks that the point's true time is present exactly in the periodic
/// model and agrees with the layer(s) of its location. Throws
/// std::invalid_argument otherwise.
void check_point_time(const EquivalentSimpleGraph& g, const GraphPoint& p);

std::string describe(const EquivalentSimpleGraph& g, const GraphPoint& p);

}  // namespace tegraph
