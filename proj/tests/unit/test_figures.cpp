#include <doctest.h>

#include <cmath>
#include <span>
#include <stdexcept>

#include "reference/figure_coordinates.hpp"
#include "tegraph/figures.hpp"

using namespace tegraph;
namespace ref = tegraph::reference;

namespace {

const FigureTable& table(const std::vector<FigureTable>& tables, const std::string& stem) {
  for (const auto& t : tables)
    if (t.file_stem == stem) return t;
  FAIL("missing table " << stem);
  throw std::logic_error("unreachable");
}

std::size_t column(const FigureTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

template <std::size_t N>
void check_curve(const FigureTable& t, const std::string& col, const std::array<std::pair<double, double>, N>& curve,
                 double tol) {
  const std::size_t c = column(t, col);
  for (const auto& [x, y] : curve) {
    const auto row = std::find_if(t.rows.begin(), t.rows.end(), [&](const auto& r) { return std::abs(r[0] - x) < 1e-9; });
    REQUIRE_MESSAGE(row != t.rows.end(), t.file_stem << " has no row at " << x);
    CHECK_MESSAGE(std::abs((*row)[c] - y) <= tol, t.file_stem << "." << col << " at " << x << ": " << (*row)[c]
                                                                << " vs " << y);
  }
}

}  // namespace

TEST_SUITE("figures") {
  TEST_CASE("fig6") {
    const auto tables = figure_tables("fig6");
    const auto& m8 = table(tables, "fig6_m8");
    check_curve(m8, "rho_0.45", ref::kFig6M8Rho045, 1e-3);
    check_curve(m8, "rho_0.4", ref::kFig6M8Rho040, 1e-3);
    check_curve(m8, "rho_0.2", ref::kFig6M8Rho020, 1e-3);
    const auto& m20 = table(tables, "fig6_m20");
    check_curve(m20, "rho_0.45", ref::kFig6M20Rho045, 1e-3);
    check_curve(m20, "rho_0.4", ref::kFig6M20Rho040, 1e-3);
    check_curve(m20, "rho_0.2", ref::kFig6M20Rho020, 1e-3);
  }

  TEST_CASE("fig9") {
    const auto tables = figure_tables("fig9");
    const auto& left = table(tables, "fig9_left");
    CHECK(left.rows.size() == 79);
    check_curve(left, "d_A0_P", ref::kFig9DistA0P, 1e-3);
    check_curve(left, "d_A0_Q", ref::kFig9DistA0Q, 1e-3);
    const auto& right = table(tables, "fig9_right");
    check_curve(right, "d_P_Q_lambda_0", ref::kFig9DistPQLambda0, 1e-3);
    check_curve(right, "d_P_Q_lambda_0.6", ref::kFig9DistPQLambda06, 1e-3);
    check_curve(right, "d_P_Q_lambda_0.9", ref::kFig9DistPQLambda09, 1e-3);
  }

  TEST_CASE("fig10") {
    const auto tables = figure_tables("fig10");
    const auto& left = table(tables, "fig10_left");
    check_curve(left, "cov_A0_P", ref::kFig10ExpCovA0P, 1e-3);
    check_curve(left, "cov_A0_Q", ref::kFig10ExpCovA0Q, 1e-3);
    check_curve(left, "cov_P_Q", ref::kFig10ExpCovPQ, 1e-3);
    const auto& right = table(tables, "fig10_right");
    check_curve(right, "cov_A0_P", ref::kFig10CauchyCovA0P, 1e-3);
    check_curve(right, "cov_A0_Q", ref::kFig10CauchyCovA0Q, 1e-3);
    check_curve(right, "cov_P_Q", ref::kFig10CauchyCovPQ, 1e-3);
  }

  TEST_CASE("fig11") {
    const auto tables = figure_tables("fig11");
    const auto& left = table(tables, "fig11_left");
    check_curve(left, "d_beta_1", ref::kFig11DistBeta1, 1e-3);
    check_curve(left, "d_beta_0.5", ref::kFig11DistBeta05, 1e-3);
    check_curve(left, "d_beta_0.3", ref::kFig11DistBeta03, 1e-3);
    const auto& right = table(tables, "fig11_right");
    check_curve(right, "cov_beta_1", ref::kFig11CovBeta1, 1e-3);
    check_curve(right, "cov_beta_0.5", ref::kFig11CovBeta05, 1e-3);
    check_curve(right, "cov_beta_0.3", ref::kFig11CovBeta03, 1e-3);
  }

  TEST_CASE("fig12") {
    const auto tables = figure_tables("fig12");
    const auto& left = table(tables, "fig12_left");
    check_curve(left, "d_rho_0.45", ref::kFig12DistRho045, 1e-3);
    check_curve(left, "d_rho_0.2", ref::kFig12DistRho020, 1e-3);
    check_curve(left, "d_rho_0", ref::kFig12DistRho0, 1e-3);
    const auto& right = table(tables, "fig12_right");
    check_curve(right, "cov_rho_0.45", ref::kFig12CovRho045, 2e-3);
    check_curve(right, "cov_rho_0.2", ref::kFig12CovRho020, 2e-3);
    check_curve(right, "cov_rho_0", ref::kFig12CovRho0, 2e-3);
  }

  TEST_CASE("alpha grid and names") {
    const auto grid = alpha_grid();
    CHECK(grid.size() == 79);
    CHECK(grid.front() == 0.2);
    CHECK(grid.back() == 8.0);
    CHECK(grid[8] == 1.0);
    CHECK(figure_names().size() == 5);
    CHECK_THROWS_AS(figure_tables("fig7"), std::invalid_argument);
  }
}
