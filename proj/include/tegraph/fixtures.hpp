#pragma once

#include <array>
#include <string>
#include <vector>

#include "tegraph/graph_model.hpp"

namespace tegraph::fixtures {

/// The eleven-vertex, three-layer worked example, read from its adjacency
/// matrix: spatial entries are 1, temporal entries are alpha.
TimeEvolvingGraph worked_example(double alpha);

/// Vertex labels in adjacency-matrix order (A0, B0, C0, D0, A1, ...).
const std::array<std::string, 11>& worked_example_vertices();

/// Adjacency matrix of the worked example with alpha substituted.
std::vector<std::vector<double>> worked_example_matrix(double alpha);

/// A0 (a vertex), P on (C0, D0) at 0.8 from C0, Q on (C2, D2) at 0.5.
GraphPoint worked_example_point(const EquivalentSimpleGraph& g, const std::string& name);

/// Periodic two-label ladder: unit rung (A, B) on every one of m layers,
/// temporal edges of weight alpha including the wrap-around.
TimeEvolvingGraph ladder(int m, double alpha);

/// Midpoint of the rung on layer floor(t) mod m, at true time t.
GraphPoint ladder_point(const EquivalentSimpleGraph& g, double t);

/// Linear three-layer graph whose single spatial edge (A, B) has weights
/// eps, 1, 1/eps on layers 0, 1, 2; temporal edges have weight 1.
TimeEvolvingGraph epsilon_graph(double eps);

/// Rung midpoints on layers 0, 1, 2 (P, Q, R).
std::array<GraphPoint, 3> epsilon_points(const EquivalentSimpleGraph& g);

/// Linear, m = 3: (A,B) on every layer, (C,E) on layers 0-1, (A,C) on 1,
/// (B,C) on layers 0 and 2 (two separate lives). E is absent from layer 2.
TimeEvolvingGraph linear_lifespan_example();

/// Periodic, m = 4: (A,B) and (B,C) on every layer, (A,D) on layer 2 only,
/// (C,D) on layers 3, 0, 1 (an arc through the wrap).
TimeEvolvingGraph periodic_lifespan_example();

}  // namespace tegraph::fixtures
