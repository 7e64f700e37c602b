#include "tegraph/spectral.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace tegraph {

LaplacianMatrix laplacian(std::size_t n, std::span<const WeightedPair> edges) {
  LaplacianMatrix lap{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  auto& L = lap.entries;
  for (const auto& e : edges) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    L(u, v) -= e.weight;
    L(v, u) -= e.weight;
    L(u, u) += e.weight;
    L(v, v) += e.weight;
  }
  return lap;
}

LaplacianMatrix laplacian(const EquivalentSimpleGraph& g) {
  std::vector<WeightedPair> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) pairs.push_back({e.u, e.v, e.weight});
  return laplacian(g.vertex_count(), pairs);
}

std::vector<int> components_of(const Eigen::MatrixXd& lap) {
  const auto n = static_cast<std::size_t>(lap.rows());
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && lap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0.0) {
          comp[j] = next;
          stack.push_back(j);
        }
    }
    ++next;
  }
  return comp;
}

PseudoinverseMatrix pseudoinverse(const LaplacianMatrix& lap) {
  const auto& L = lap.entries;
  if (L.rows() != L.cols()) throw std::invalid_argument("Laplacian must be square");
  const double scale = L.cwiseAbs().maxCoeff();
  if (L.size() > 0 && (L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("pseudoinverse expects a symmetric matrix");

  PseudoinverseMatrix out{Eigen::MatrixXd::Zero(L.rows(), L.cols()), components_of(L)};

  std::map<int, std::vector<Eigen::Index>> blocks;
  for (std::size_t i = 0; i < out.component.size(); ++i)
    blocks[out.component[i]].push_back(static_cast<Eigen::Index>(i));

  for (const auto& [comp, idx] : blocks) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) block(r, c) = L(idx[r], idx[c]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);
    const auto& values = eig.eigenvalues();
    const double cutoff = kRankTolerance * std::max(values.cwiseAbs().maxCoeff(), 0.0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(k);
    for (Eigen::Index i = 0; i < k; ++i)
      if (values(i) > cutoff) inv(i) = 1.0 / values(i);
    const Eigen::MatrixXd& V = eig.eigenvectors();
    Eigen::MatrixXd pinv = V * inv.asDiagonal() * V.transpose();
    pinv = 0.5 * (pinv + pinv.transpose());

    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) out.entries(idx[r], idx[c]) = pinv(r, c);
  }
  return out;
}

double effective_resistance(const PseudoinverseMatrix& lp, VertexId a, VertexId b) {
  if (lp.component.at(a) != lp.component.at(b))
    throw std::invalid_argument("effective resistance between different components is undefined");
  const auto i = static_cast<Eigen::Index>(a);
  const auto j = static_cast<Eigen::Index>(b);
  const auto& M = lp.entries;
  return M(i, i) + M(j, j) - 2.0 * M(i, j);
}

}  // namespace tegraph
