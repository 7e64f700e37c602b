#include "tegraph/fixtures.hpp"

#include <cmath>
#include <stdexcept>
#include <string_view>

namespace tegraph::fixtures {
namespace {

// '1' spatial unit weight, 'a' temporal weight alpha, '.' no edge.
constexpr std::array<std::string_view, 11> kWorkedExampleMatrix{
    ".1.1a......",  //
    "1.1..a.....",  //
    ".1.1..a....",  //
    "1.1....a...",  //
    "a....1..a..",  //
    ".a..1.1....",  //
    "..a..1.1.a.",  //
    "...a..1...a",  //
    "....a.....1",  //
    "......a...1",  //
    ".......a11.",
};

Vertex parse_vertex(const std::string& name) { return Vertex{std::stoi(name.substr(1)), name.substr(0, 1)}; }

}  // namespace

const std::array<std::string, 11>& worked_example_vertices() {
  static const std::array<std::string, 11> names{"A0", "B0", "C0", "D0", "A1", "B1",
                                                 "C1", "D1", "A2", "C2", "D2"};
  return names;
}

std::vector<std::vector<double>> worked_example_matrix(double alpha) {
  std::vector<std::vector<double>> w(11, std::vector<double>(11, 0.0));
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) {
      const char c = kWorkedExampleMatrix[i][j];
      w[i][j] = c == '1' ? 1.0 : c == 'a' ? alpha : 0.0;
    }
  return w;
}

TimeEvolvingGraph worked_example(double alpha) {
  const auto& names = worked_example_vertices();
  TimeEvolvingGraph teg;
  teg.time_model = TimeModel::linear;
  teg.m = 3;
  for (int t = 0; t < 3; ++t) teg.layers.push_back(Layer{t, {}, {}});
  for (const auto& name : names) {
    const Vertex v = parse_vertex(name);
    teg.layers[static_cast<std::size_t>(v.time)].labels.push_back(v.label);
  }
  ExplicitTemporal temporal;
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = i + 1; j < 11; ++j) {
      const char c = kWorkedExampleMatrix[i][j];
      if (c != kWorkedExampleMatrix[j][i]) throw std::logic_error("worked example matrix is not symmetric");
      if (c == '.') continue;
      const Vertex a = parse_vertex(names[i]);
      const Vertex b = parse_vertex(names[j]);
      if (c == '1')
        teg.layers[static_cast<std::size_t>(a.time)].edges.push_back({a.label, b.label, 1.0});
      else
        temporal.edges.push_back({a, b, alpha});
    }
  teg.temporal = std::move(temporal);
  return teg;
}

GraphPoint worked_example_point(const EquivalentSimpleGraph& g, const std::string& name) {
  if (name == "A0") return GraphPoint::at_vertex(*g.find_vertex("A", 0));
  const auto on = [&](int time, double delta_from_c) {
    const EdgeId e = g.find_spatial_edge("C", "D", time).value();
    const bool from_c = g.vertex(g.edge(e).u).label == "C";
    return GraphPoint::on_edge(e, from_c ? delta_from_c : 1.0 - delta_from_c);
  };
  if (name == "P") return on(0, 0.8);
  if (name == "Q") return on(2, 0.5);
  throw std::invalid_argument("unknown worked-example point '" + name + "'");
}

TimeEvolvingGraph ladder(int m, double alpha) {
  TimeEvolvingGraph teg;
  teg.time_model = TimeModel::periodic;
  teg.m = m;
  for (int t = 0; t < m; ++t) teg.layers.push_back(Layer{t, {"A", "B"}, {{"A", "B", 1.0}}});
  teg.temporal = MarkovComplete{alpha};
  return teg;
}

GraphPoint ladder_point(const EquivalentSimpleGraph& g, double t) {
  const int layer = static_cast<int>(static_cast<long long>(std::floor(t)) % g.layer_count());
  return GraphPoint::on_edge(g.find_spatial_edge("A", "B", layer).value(), 0.5, t);
}

TimeEvolvingGraph epsilon_graph(double eps) {
  TimeEvolvingGraph teg;
  teg.time_model = TimeModel::linear;
  teg.m = 3;
  const std::array<double, 3> weights{eps, 1.0, 1.0 / eps};
  for (int t = 0; t < 3; ++t)
    teg.layers.push_back(Layer{t, {"A", "B"}, {{"A", "B", weights[static_cast<std::size_t>(t)]}}});
  teg.temporal = MarkovComplete{1.0};
  return teg;
}

std::array<GraphPoint, 3> epsilon_points(const EquivalentSimpleGraph& g) {
  std::array<GraphPoint, 3> out;
  for (int t = 0; t < 3; ++t)
    out[static_cast<std::size_t>(t)] = GraphPoint::on_edge(g.find_spatial_edge("A", "B", t).value(), 0.5);
  return out;
}

TimeEvolvingGraph linear_lifespan_example() {
  TimeEvolvingGraph teg;
  teg.time_model = TimeModel::linear;
  teg.m = 3;
  teg.layers = {
      Layer{0, {"A", "B", "C", "E"}, {{"A", "B", 1.0}, {"C", "E", 2.0}, {"B", "C", 1.0}}},
      Layer{1, {"A", "B", "C", "E"}, {{"A", "B", 1.0}, {"C", "E", 0.5}, {"A", "C", 1.0}}},
      Layer{2, {"A", "B", "C"}, {{"A", "B", 1.5}, {"B", "C", 1.0}}},
  };
  teg.temporal = MarkovComplete{1.0};
  return teg;
}

TimeEvolvingGraph periodic_lifespan_example() {
  TimeEvolvingGraph teg;
  teg.time_model = TimeModel::periodic;
  teg.m = 4;
  teg.layers = {
      Layer{0, {"A", "B", "C", "D"}, {{"A", "B", 1.0}, {"C", "D", 1.0}, {"B", "C", 1.0}}},
      Layer{1, {"A", "B", "C", "D"}, {{"A", "B", 1.0}, {"C", "D", 2.0}, {"B", "C", 1.0}}},
      Layer{2, {"A", "B", "C", "D"}, {{"A", "B", 1.0}, {"A", "D", 1.0}, {"B", "C", 1.0}}},
      Layer{3, {"A", "B", "C", "D"}, {{"A", "B", 0.5}, {"C", "D", 1.0}, {"B", "C", 1.0}}},
  };
  teg.temporal = MarkovComplete{1.0};
  return teg;
}

}  // namespace tegraph::fixtures
