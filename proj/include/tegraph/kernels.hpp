#pragma once

#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "tegraph/metric.hpp"

namespace tegraph {

enum class Family { power_exponential, matern, generalized_cauchy, dagum };

std::string_view to_string(Family family);

/// A completely monotone function with psi(0) = 1, drawn from one of four
/// parametric families. Parameters are range-checked on construction.
///
///   power_exponential  exp(-beta x^alpha)                          0<alpha<=1,   beta>0
///   matern             2^(1-alpha)/Gamma(alpha) (beta x)^alpha K_alpha(beta x)
///                                                                  0<alpha<=1/2, beta>0
///   generalized_cauchy (beta x^alpha + 1)^(-xi/alpha)              0<alpha<=1,   beta>0, xi>0
///   dagum              1 - (beta x^alpha / (1 + beta x^alpha))^(xi/alpha)
///                                                                  0<alpha<=1,   beta>0, 0<xi<=1
class CompletelyMonotone {
 public:
  static CompletelyMonotone power_exponential(double alpha, double beta);
  static CompletelyMonotone matern(double alpha, double beta);
  static CompletelyMonotone generalized_cauchy(double alpha, double beta, double xi);
  static CompletelyMonotone dagum(double alpha, double beta, double xi);

  /// Parses "name(a,b[,xi])", e.g. "power_exponential(1,1)" or "dagum(1,2,0.5)".
  /// "exponential" and "cauchy" are accepted as aliases.
  static CompletelyMonotone parse(std::string_view text);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double xi() const { return xi_; }
  [[nodiscard]] std::string describe() const;

  /// Throws std::invalid_argument for negative or non-finite x.
  [[nodiscard]] double operator()(double x) const;

 private:
  CompletelyMonotone(Family family, double alpha, double beta, double xi);

  Family family_;
  double alpha_;
  double beta_;
  double xi_;
};

inline double psi_eval(const CompletelyMonotone& f, double x) { return f(x); }

/// psi(d(u1, u2)).
double kernel_compose(const MetricEngine& engine, const CompletelyMonotone& f, const GraphPoint& u1,
                      const GraphPoint& u2);

/// G[i,j] = psi(d(p_i, p_j)), unit diagonal.
Eigen::MatrixXd gram_matrix(const MetricEngine& engine, const CompletelyMonotone& f,
                            std::span<const GraphPoint> points);

enum class Definiteness { strictly_pd, psd, indefinite };

std::string_view to_string(Definiteness d);

struct PdReport {
  Definiteness kind = Definiteness::strictly_pd;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Classifies a symmetric matrix by its smallest eigenvalue against
/// 1e-8 * n * ||G||_2. Throws std::invalid_argument for asymmetric input.
PdReport pd_check(const Eigen::MatrixXd& gram);

}  // namespace tegraph
