#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tegraph {

/// One CSV worth of curves: the first column is the abscissa.
struct FigureTable {
  std::string file_stem;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// "key: value" metadata written as '#' comments (fixture hash, fixed parameters).
  std::vector<std::string> notes;
};

/// Names accepted by `figure_tables`.
const std::vector<std::string>& figure_names();

/// Curves of a reproduced figure:
///   fig6   circulant correlation by cyclic lag, m = 8 and m = 20
///   fig9   worked-example distances over alpha (d(P,Q) per lambda)
///   fig10  exponential(1,1) and generalized_cauchy(1,5,0.5) covariances
///   fig11  ladder distances and exponential(0.5,0.5) covariances per beta
///   fig12  ladder distances and dagum(1,2,0.5) covariances per rho
/// Throws std::invalid_argument for other names.
std::vector<FigureTable> figure_tables(std::string_view name);

/// alpha = 0.2, 0.3, ..., 8.0 computed as k/10 to avoid drift.
std::vector<double> alpha_grid();

}  // namespace tegraph
