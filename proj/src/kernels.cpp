#include "tegraph/kernels.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tegraph {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::power_exponential: return "power_exponential";
    case Family::matern: return "matern";
    case Family::generalized_cauchy: return "generalized_cauchy";
    case Family::dagum: return "dagum";
  }
  return "unknown";
}

CompletelyMonotone::CompletelyMonotone(Family family, double alpha, double beta, double xi)
    : family_(family), alpha_(alpha), beta_(beta), xi_(xi) {}

CompletelyMonotone CompletelyMonotone::power_exponential(double alpha, double beta) {
  require(alpha > 0.0 && alpha <= 1.0, "power exponential needs 0 < alpha <= 1");
  require(beta > 0.0 && std::isfinite(beta), "power exponential needs beta > 0");
  return {Family::power_exponential, alpha, beta, 0.0};
}

CompletelyMonotone CompletelyMonotone::matern(double alpha, double beta) {
  require(alpha > 0.0 && alpha <= 0.5, "Matern needs 0 < alpha <= 1/2");
  require(beta > 0.0 && std::isfinite(beta), "Matern needs beta > 0");
  return {Family::matern, alpha, beta, 0.0};
}

CompletelyMonotone CompletelyMonotone::generalized_cauchy(double alpha, double beta, double xi) {
  require(alpha > 0.0 && alpha <= 1.0, "generalized Cauchy needs 0 < alpha <= 1");
  require(beta > 0.0 && std::isfinite(beta), "generalized Cauchy needs beta > 0");
  require(xi > 0.0 && std::isfinite(xi), "generalized Cauchy needs xi > 0");
  return {Family::generalized_cauchy, alpha, beta, xi};
}

CompletelyMonotone CompletelyMonotone::dagum(double alpha, double beta, double xi) {
  require(alpha > 0.0 && alpha <= 1.0, "Dagum needs 0 < alpha <= 1");
  require(beta > 0.0 && std::isfinite(beta), "Dagum needs beta > 0");
  require(xi > 0.0 && xi <= 1.0, "Dagum needs 0 < xi <= 1");
  return {Family::dagum, alpha, beta, xi};
}

CompletelyMonotone CompletelyMonotone::parse(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("family must look like name(a,b[,xi]): " + std::string(text));
  std::string name(text.substr(0, open));
  std::vector<double> args;
  std::string_view rest = text.substr(open + 1, close - open - 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad family parameter '" + std::string(tok) + "'");
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }

  const auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument(name + " takes " + std::to_string(k) + " parameters");
  };
  if (name == "power_exponential" || name == "exponential") {
    need(2);
    return power_exponential(args[0], args[1]);
  }
  if (name == "matern") {
    need(2);
    return matern(args[0], args[1]);
  }
  if (name == "generalized_cauchy" || name == "cauchy") {
    need(3);
    return generalized_cauchy(args[0], args[1], args[2]);
  }
  if (name == "dagum") {
    need(3);
    return dagum(args[0], args[1], args[2]);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string CompletelyMonotone::describe() const {
  std::ostringstream out;
  out << to_string(family_) << '(' << alpha_ << ',' << beta_;
  if (family_ == Family::generalized_cauchy || family_ == Family::dagum) out << ',' << xi_;
  out << ')';
  return out.str();
}

double CompletelyMonotone::operator()(double x) const {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("psi is defined on [0, inf)");
  if (x == 0.0) return 1.0;
  switch (family_) {
    case Family::power_exponential:
      return std::exp(-beta_ * std::pow(x, alpha_));
    case Family::matern: {
      const double z = beta_ * x;
      // K_alpha underflows long before the prefactor overflows.
      if (z > 700.0) return 0.0;
      return std::pow(2.0, 1.0 - alpha_) / std::tgamma(alpha_) * std::pow(z, alpha_) * std::cyl_bessel_k(alpha_, z);
    }
    case Family::generalized_cauchy:
      return std::pow(beta_ * std::pow(x, alpha_) + 1.0, -xi_ / alpha_);
    case Family::dagum: {
      const double s = beta_ * std::pow(x, alpha_);
      return 1.0 - std::pow(s / (1.0 + s), xi_ / alpha_);
    }
  }
  return 0.0;
}

double kernel_compose(const MetricEngine& engine, const CompletelyMonotone& f, const GraphPoint& u1,
                      const GraphPoint& u2) {
  return f(engine.distance(u1, u2).value);
}

Eigen::MatrixXd gram_matrix(const MetricEngine& engine, const CompletelyMonotone& f,
                            std::span<const GraphPoint> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd G(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    G(i, i) = kernel_compose(engine, f, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double k = kernel_compose(engine, f, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      G(i, j) = k;
      G(j, i) = k;
    }
  }
  return G;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::strictly_pd: return "strictly_pd";
    case Definiteness::psd: return "psd";
    case Definiteness::indefinite: return "indefinite";
  }
  return "unknown";
}

PdReport pd_check(const Eigen::MatrixXd& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) throw std::invalid_argument("pd_check needs a non-empty square matrix");
  const double scale = gram.cwiseAbs().maxCoeff();
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("pd_check expects a symmetric matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  const auto& values = eig.eigenvalues();
  PdReport report;
  report.min_eigenvalue = values.minCoeff();
  const double norm = values.cwiseAbs().maxCoeff();
  report.tolerance = 1e-8 * static_cast<double>(gram.rows()) * norm;
  if (report.min_eigenvalue > report.tolerance)
    report.kind = Definiteness::strictly_pd;
  else if (report.min_eigenvalue >= -report.tolerance)
    report.kind = Definiteness::psd;
  else
    report.kind = Definiteness::indefinite;
  return report;
}

}  // namespace tegraph
