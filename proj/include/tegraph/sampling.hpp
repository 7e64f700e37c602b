#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tegraph/metric.hpp"

namespace tegraph {

/// Rows are draws, columns follow `points`.
struct SampleBatch {
  std::vector<GraphPoint> points;
  Eigen::MatrixXd draws;
  std::uint64_t seed = 0;
};

/// Draws from N(0, K) with K[i,j] = k_Z(p_i, p_j). K is Cholesky-factored
/// over distinct canonical points, adding diagonal jitter from 1e-12 up to
/// 1e-8 (relative to the mean variance) when the plain factorisation fails.
/// Duplicate points share a column. Throws std::runtime_error when K is
/// not positive semidefinite within the jitter ceiling.
SampleBatch sample_field(const MetricEngine& engine, std::span<const GraphPoint> points, std::size_t n_draws,
                         std::uint64_t seed);

struct VariogramEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

inline constexpr int kBridgeGridSteps = 512;

/// Monte Carlo estimate of Var(Z(u1) - Z(u2)) from a pathwise simulation
/// that never evaluates the closed-form covariance: vertex values drawn
/// from L+ and linearly interpolated, Brownian bridges built as
/// W(delta) - delta W(1) from random-walk increments on a 512-step grid
/// (query coordinates snapped to the grid), coupled across a life by the
/// temporal correlation, and in periodic time a Wiener path at the true
/// times.
VariogramEstimate mc_variogram(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2,
                               std::size_t n_draws, std::uint64_t seed);

/// splitmix64 mix of (seed, counter, stream); seeds one generator per draw.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream);

}  // namespace tegraph
