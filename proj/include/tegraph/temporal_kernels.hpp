#pragma once

#include <span>
#include <variant>
#include <vector>

namespace tegraph {

/// Lag correlation of a first-order autoregression, lambda^|h|.
/// Throws std::invalid_argument unless lambda is in (-1, 1).
double ar1(int lag, double lambda);

/// First column of the correlation matrix obtained by normalising
/// (I - rho C)^-1, with C the adjacency of the m-cycle. Entry j is the
/// correlation at cyclic lag j. Requires rho in [0, 0.5) and m >= 3.
std::vector<double> circulant_correlation(double rho, int m);

/// min(|a - b|, m - |a - b|).
int cyclic_lag(int a, int b, int m);

/// AR(1) correlation restricted to a set of layers on the m-cycle. Layers on
/// the same arc of the set correlate as lambda^gap, with the gap counted
/// along the arc; layers on different arcs are independent. The set must
/// not cover the whole cycle.
double block_ar1(int tau1, int tau2, double lambda, std::span<const int> lifespan, int m);

struct Ar1Kernel {
  double lambda = 0.0;
};

/// Circulant correlation with its column computed once.
class CirculantKernel {
 public:
  CirculantKernel(double rho, int m);

  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const std::vector<double>& column() const { return column_; }
  [[nodiscard]] double at(int tau1, int tau2) const { return column_[static_cast<std::size_t>(cyclic_lag(tau1, tau2, m_))]; }

 private:
  double rho_;
  int m_;
  std::vector<double> column_;
};

struct BlockAr1Kernel {
  double lambda = 0.0;
  std::vector<int> lifespan;
  int m = 3;
};

using TemporalKernelSpec = std::variant<Ar1Kernel, CirculantKernel, BlockAr1Kernel>;

/// Correlation between layers tau1 and tau2 under the given kernel.
double kt_eval(const TemporalKernelSpec& spec, int tau1, int tau2);

}  // namespace tegraph
