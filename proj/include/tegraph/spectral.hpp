#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tegraph/graph_model.hpp"

namespace tegraph {

/// L = D - W over the vertex order of the equivalent simple graph.
struct LaplacianMatrix {
  Eigen::MatrixXd entries;
};

/// Moore-Penrose inverse of a Laplacian, block diagonal by component.
struct PseudoinverseMatrix {
  Eigen::MatrixXd entries;
  std::vector<int> component;
};

struct WeightedPair {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;
};

/// Spatial and temporal edges both contribute.
LaplacianMatrix laplacian(const EquivalentSimpleGraph& g);
LaplacianMatrix laplacian(std::size_t n, std::span<const WeightedPair> edges);

/// Eigenvalues at or below 1e-12 times the largest eigenvalue of each
/// component block count as null space. Throws std::invalid_argument when
/// the input is not symmetric.
PseudoinverseMatrix pseudoinverse(const LaplacianMatrix& lap);

/// (e_a - e_b)^T L+ (e_a - e_b). Throws std::invalid_argument when a and b
/// lie in different components.
double effective_resistance(const PseudoinverseMatrix& lp, VertexId a, VertexId b);

/// Connected components read off the nonzero off-diagonal pattern.
std::vector<int> components_of(const Eigen::MatrixXd& lap);

inline constexpr double kRankTolerance = 1e-12;

}  // namespace tegraph
