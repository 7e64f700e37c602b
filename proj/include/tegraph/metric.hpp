#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tegraph/graph_model.hpp"
#include "tegraph/lifespan.hpp"
#include "tegraph/spectral.hpp"
#include "tegraph/temporal_kernels.hpp"

namespace tegraph {

/// Thrown when two points live in different connected components.
class ComponentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when two distinct points come out at (numerically) zero distance.
class DegenerateDistance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How bridges on different copies of the same edge are coupled.
/// `independent` drops every cross-time bridge covariance.
enum class BridgeCoupling { temporal_kernel, independent };

/// Linear time uses lambda only. Periodic time needs rho (full-cycle
/// lifespans) and beta > 0; lambda drives interrupted lifespans.
struct MetricParams {
  double lambda = 0.0;
  std::optional<double> rho;
  std::optional<double> beta;
  BridgeCoupling coupling = BridgeCoupling::temporal_kernel;
};

/// Covariance k_Z split into its three independent sources.
struct CovarianceTerms {
  double vertex = 0.0;
  double bridge = 0.0;
  double wiener = 0.0;

  [[nodiscard]] double total() const { return vertex + bridge + wiener; }
};

struct DistanceResult {
  double value = 0.0;
  double vertex_part = 0.0;
  double bridge_part = 0.0;
  double wiener_part = 0.0;
};

/// min(d1, d2) - d1 d2.
double brownian_bridge_cov(double d1, double d2);

/// Covariance and variogram distance of the Gaussian field on a graph.
/// Holds the pseudoinverse, the life partition and the circulant column;
/// all queries are const.
class MetricEngine {
 public:
  MetricEngine(EquivalentSimpleGraph graph, MetricParams params);

  [[nodiscard]] const EquivalentSimpleGraph& graph() const { return graph_; }
  [[nodiscard]] const MetricParams& params() const { return params_; }
  [[nodiscard]] const PseudoinverseMatrix& pseudoinverse() const { return pinv_; }
  [[nodiscard]] const LifePartition& lives() const { return lives_; }

  /// Temporal correlation between the bridges on two edges: zero unless
  /// they share a life, one on the diagonal.
  [[nodiscard]] double bridge_correlation(EdgeId a, EdgeId b) const;

  /// k_Z(u1, u2). Points must be in the same component.
  [[nodiscard]] CovarianceTerms covariance(const GraphPoint& u1, const GraphPoint& u2) const;

  /// Variance of Z(u1) - Z(u2). Exactly zero for identical canonical points.
  [[nodiscard]] DistanceResult distance(const GraphPoint& u1, const GraphPoint& u2) const;

 private:
  struct Resolved {
    GraphPoint point;
    VertexId a = 0;
    VertexId b = 0;
    double wa = 1.0;
    double wb = 0.0;
    std::optional<EdgeId> edge;
    double delta = 0.0;
    double time = 0.0;
  };

  [[nodiscard]] Resolved resolve(const GraphPoint& p) const;
  void require_same_component(const Resolved& x, const Resolved& y) const;
  [[nodiscard]] double bridge_cov(const Resolved& x, const Resolved& y) const;
  [[nodiscard]] double vertex_cov(const Resolved& x, const Resolved& y) const;

  EquivalentSimpleGraph graph_;
  MetricParams params_;
  PseudoinverseMatrix pinv_;
  LifePartition lives_;
  std::optional<CirculantKernel> circulant_;
};

double cov_z_linear(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2);
double cov_z_periodic(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2);
DistanceResult dist(const MetricEngine& engine, const GraphPoint& u1, const GraphPoint& u2);

struct TriangleViolation {
  std::size_t i = 0, j = 0, k = 0;
  /// d(i,j) + d(j,k) and d(i,k).
  double two_legs = 0.0;
  double direct = 0.0;
};

struct AuditReport {
  std::size_t points = 0;
  std::size_t pairs_checked = 0;
  std::size_t negative = 0;
  std::size_t asymmetric = 0;
  /// Pairs where d == 0 disagrees with canonical equality.
  std::size_t identity_failures = 0;
  std::size_t triples_checked = 0;
  std::vector<TriangleViolation> triangle_violations;

  [[nodiscard]] bool semimetric() const { return negative == 0 && asymmetric == 0 && identity_failures == 0; }
};

/// Checks the semi-metric axioms on every pair and reports triangle
/// inequality failures on every triple. Requires at least three points.
AuditReport semimetric_audit(const MetricEngine& engine, std::span<const GraphPoint> points,
                             double symmetry_tolerance = 1e-12);

/// Kernel that a life with the given span uses under these parameters.
TemporalKernelSpec lifespan_kernel(TimeModel model, const MetricParams& params, const Lifespan& span, int m);

}  // namespace tegraph
