#include "tegraph/figures.hpp"

#include <cstdio>
#include <stdexcept>

#include "tegraph/fixtures.hpp"
#include "tegraph/graph_io.hpp"
#include "tegraph/kernels.hpp"
#include "tegraph/metric.hpp"
#include "tegraph/temporal_kernels.hpp"

namespace tegraph {
namespace {

std::string suffix(double v) { return format_shortest(v); }

std::string hash_note(const TimeEvolvingGraph& teg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "graph_hash: 0x%016llx", static_cast<unsigned long long>(graph_hash(teg)));
  return buf;
}

std::vector<FigureTable> fig6() {
  std::vector<FigureTable> out;
  for (int m : {8, 20}) {
    FigureTable t{"fig6_m" + std::to_string(m), {"lag"}, {}, {"m: " + std::to_string(m)}};
    const std::vector<double> rhos{0.45, 0.4, 0.2};
    std::vector<std::vector<double>> cols;
    for (double rho : rhos) {
      t.columns.push_back("rho_" + suffix(rho));
      cols.push_back(circulant_correlation(rho, m));
    }
    // lag m is plotted too; it closes the cycle back to lag 0
    for (int lag = 0; lag <= m; ++lag) {
      std::vector<double> row{static_cast<double>(lag)};
      for (const auto& c : cols) row.push_back(c[static_cast<std::size_t>(lag % m)]);
      t.rows.push_back(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

struct WorkedExampleDistances {
  double a0p = 0, a0q = 0;
  std::vector<double> pq;
};

WorkedExampleDistances worked_example_distances(double alpha, const std::vector<double>& lambdas) {
  const auto g = build_equivalent_simple(fixtures::worked_example(alpha));
  const auto a0 = fixtures::worked_example_point(g, "A0");
  const auto p = fixtures::worked_example_point(g, "P");
  const auto q = fixtures::worked_example_point(g, "Q");
  WorkedExampleDistances out;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    MetricParams params;
    params.lambda = lambdas[i];
    const MetricEngine engine(g, params);
    if (i == 0) {
      out.a0p = engine.distance(a0, p).value;
      out.a0q = engine.distance(a0, q).value;
    }
    out.pq.push_back(engine.distance(p, q).value);
  }
  return out;
}

std::vector<FigureTable> fig9() {
  const std::vector<double> lambdas{0.0, 0.6, 0.9};
  const std::string fixture = "fixture: worked example, alpha swept; " + hash_note(fixtures::worked_example(1.0)) + " at alpha=1";
  FigureTable left{"fig9_left", {"alpha", "d_A0_P", "d_A0_Q"}, {}, {fixture, "params: lambda=0"}};
  FigureTable right{"fig9_right", {"alpha"}, {}, {fixture}};
  for (double l : lambdas) right.columns.push_back("d_P_Q_lambda_" + suffix(l));
  for (double alpha : alpha_grid()) {
    const auto d = worked_example_distances(alpha, lambdas);
    left.rows.push_back({alpha, d.a0p, d.a0q});
    std::vector<double> row{alpha};
    row.insert(row.end(), d.pq.begin(), d.pq.end());
    right.rows.push_back(std::move(row));
  }
  return {left, right};
}

std::vector<FigureTable> fig10() {
  const auto exp_family = CompletelyMonotone::power_exponential(1.0, 1.0);
  const auto cauchy = CompletelyMonotone::generalized_cauchy(1.0, 5.0, 0.5);
  const std::vector<std::string> cols{"alpha", "cov_A0_P", "cov_A0_Q", "cov_P_Q"};
  const std::string fixture = "fixture: worked example, alpha swept; " + hash_note(fixtures::worked_example(1.0)) + " at alpha=1";
  FigureTable left{"fig10_left", cols, {}, {fixture, "params: lambda=0 (A0 pairs), lambda=0.6 (P,Q)", "family: " + exp_family.describe()}};
  FigureTable right{"fig10_right", cols, {}, {fixture, "params: lambda=0 (A0 pairs), lambda=0.6 (P,Q)", "family: " + cauchy.describe()}};
  for (double alpha : alpha_grid()) {
    const auto d = worked_example_distances(alpha, {0.6});
    left.rows.push_back({alpha, exp_family(d.a0p), exp_family(d.a0q), exp_family(d.pq[0])});
    right.rows.push_back({alpha, cauchy(d.a0p), cauchy(d.a0q), cauchy(d.pq[0])});
  }
  return {left, right};
}

FigureTable ladder_table(std::string stem, const std::string& prefix, const std::vector<double>& series,
                         const std::vector<MetricParams>& params, double alpha, const CompletelyMonotone* psi) {
  const auto teg = fixtures::ladder(8, alpha);
  FigureTable t{std::move(stem), {"t"}, {}, {"fixture: ladder m=8; " + hash_note(teg)}};
  for (double s : series) t.columns.push_back(prefix + suffix(s));
  std::string fixed = "params: alpha=" + suffix(alpha);
  if (params.size() > 1 && params[0].rho == params[1].rho) fixed += " rho=" + suffix(*params[0].rho);
  if (params.size() > 1 && params[0].beta == params[1].beta) fixed += " beta=" + suffix(*params[0].beta);
  t.notes.push_back(fixed);
  if (psi) t.notes.push_back("family: " + psi->describe());
  const auto g = build_equivalent_simple(teg);
  std::vector<MetricEngine> engines;
  for (const auto& p : params) engines.emplace_back(g, p);
  const auto origin = fixtures::ladder_point(g, 0.0);
  for (int step = 0; step <= 24; ++step) {
    const auto pt = fixtures::ladder_point(g, static_cast<double>(step));
    std::vector<double> row{static_cast<double>(step)};
    for (const auto& engine : engines) {
      const double d = engine.distance(origin, pt).value;
      row.push_back(psi ? (*psi)(d) : d);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<FigureTable> fig11() {
  const std::vector<double> betas{1.0, 0.5, 0.3};
  std::vector<MetricParams> params;
  for (double b : betas) params.push_back(MetricParams{0.0, 0.45, b, BridgeCoupling::temporal_kernel});
  const auto psi = CompletelyMonotone::power_exponential(0.5, 0.5);
  return {ladder_table("fig11_left", "d_beta_", betas, params, 1.0, nullptr),
          ladder_table("fig11_right", "cov_beta_", betas, params, 1.0, &psi)};
}

std::vector<FigureTable> fig12() {
  const std::vector<double> rhos{0.45, 0.2, 0.0};
  std::vector<MetricParams> params;
  for (double r : rhos) params.push_back(MetricParams{0.0, r, 0.3, BridgeCoupling::temporal_kernel});
  const auto psi = CompletelyMonotone::dagum(1.0, 2.0, 0.5);
  return {ladder_table("fig12_left", "d_rho_", rhos, params, 10.0, nullptr),
          ladder_table("fig12_right", "cov_rho_", rhos, params, 10.0, &psi)};
}

}  // namespace

std::vector<double> alpha_grid() {
  std::vector<double> out;
  for (int k = 2; k <= 80; ++k) out.push_back(k / 10.0);
  return out;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig6", "fig9", "fig10", "fig11", "fig12"};
  return names;
}

std::vector<FigureTable> figure_tables(std::string_view name) {
  if (name == "fig6") return fig6();
  if (name == "fig9") return fig9();
  if (name == "fig10") return fig10();
  if (name == "fig11") return fig11();
  if (name == "fig12") return fig12();
  throw std::invalid_argument("unknown figure '" + std::string(name) + "'; expected fig6, fig9, fig10, fig11 or fig12");
}

}  // namespace tegraph
