#include "tegraph/temporal_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace tegraph {
namespace {

void check_lambda(double lambda) {
  if (!(lambda > -1.0 && lambda < 1.0))
    throw std::invalid_argument("AR(1) correlation lambda must lie in (-1, 1)");
}

}  // namespace

double ar1(int lag, double lambda) {
  check_lambda(lambda);
  return std::pow(lambda, std::abs(lag));
}

std::vector<double> circulant_correlation(double rho, int m) {
  if (!(rho >= 0.0 && rho < 0.5))
    throw std::invalid_argument("circulant partial correlation rho must lie in [0, 0.5)");
  if (m < 3) throw std::invalid_argument("circulant correlation needs m >= 3");

  // I - rho C is diagonalised by the DFT with eigenvalues 1 - 2 rho cos(2 pi j / m),
  // so its inverse is circulant with first column given by an inverse DFT.
  std::vector<double> inv_eigen(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    inv_eigen[static_cast<std::size_t>(j)] = 1.0 / (1.0 - 2.0 * rho * std::cos(2.0 * std::numbers::pi * j / m));

  std::vector<double> column(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      const long long jk = static_cast<long long>(j) * k % m;
      sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(jk) / m) * inv_eigen[static_cast<std::size_t>(j)];
    }
    column[static_cast<std::size_t>(k)] = sum / m;
  }
  const double diag = column[0];
  for (auto& c : column) c /= diag;
  column[0] = 1.0;
  return column;
}

int cyclic_lag(int a, int b, int m) {
  const int gap = std::abs(a - b) % m;
  return std::min(gap, m - gap);
}

double block_ar1(int tau1, int tau2, double lambda, std::span<const int> lifespan, int m) {
  check_lambda(lambda);
  if (m < 1) throw std::invalid_argument("block AR(1) needs m >= 1");
  std::vector<bool> alive(static_cast<std::size_t>(m), false);
  for (int t : lifespan) {
    if (t < 0 || t >= m) throw std::invalid_argument("lifespan layer outside [0, m)");
    alive[static_cast<std::size_t>(t)] = true;
  }
  const auto in_span = [&](int t) { return t >= 0 && t < m && alive[static_cast<std::size_t>(t)]; };
  if (!in_span(tau1) || !in_span(tau2))
    throw std::invalid_argument("layer " + std::to_string(in_span(tau1) ? tau2 : tau1) + " is outside the lifespan");
  if (std::count(alive.begin(), alive.end(), true) == m)
    throw std::invalid_argument("a lifespan covering the whole cycle uses the circulant kernel");
  if (tau1 == tau2) return 1.0;

  // Some layer is dead, so every arc has a unique forward traversal order.
  // Walk forward from tau1; if tau2 is not reached before a gap, walk back.
  const auto walk = [&](int step) -> int {
    int t = tau1;
    for (int gap = 1; gap < m; ++gap) {
      t = ((t + step) % m + m) % m;
      if (!alive[static_cast<std::size_t>(t)]) return -1;
      if (t == tau2) return gap;
    }
    return -1;
  };
  int gap = walk(+1);
  if (gap < 0) gap = walk(-1);
  if (gap < 0) return 0.0;
  return std::pow(lambda, gap);
}

CirculantKernel::CirculantKernel(double rho, int m) : rho_(rho), m_(m), column_(circulant_correlation(rho, m)) {}

double kt_eval(const TemporalKernelSpec& spec, int tau1, int tau2) {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Ar1Kernel>) {
          return ar1(tau1 - tau2, k.lambda);
        } else if constexpr (std::is_same_v<K, CirculantKernel>) {
          if (tau1 < 0 || tau2 < 0 || tau1 >= k.m() || tau2 >= k.m())
            throw std::invalid_argument("layer outside the cycle");
          return k.at(tau1, tau2);
        } else {
          return block_ar1(tau1, tau2, k.lambda, k.lifespan, k.m);
        }
      },
      spec);
}

}  // namespace tegraph
