#include "tegraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tegraph/figures.hpp"
#include "tegraph/fixtures.hpp"
#include "tegraph/graph_io.hpp"
#include "tegraph/kernels.hpp"
#include "tegraph/metric.hpp"
#include "tegraph/sampling.hpp"
#include "tegraph/temporal_kernels.hpp"

namespace tegraph::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

/// Valid graph refused by `validate`; carries the violation list.
struct InvalidGraph {
  std::vector<std::string> violations;
};

std::string hex(std::uint64_t h) {
  std::ostringstream s;
  s << "0x" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

struct Loaded {
  TimeEvolvingGraph spec;
  RunParams params;
  std::optional<MetricEngine> engine;
};

Loaded load(const std::string& graph_file, const std::string& params_arg) {
  Loaded l;
  l.params = params_arg.empty() ? RunParams{} : load_params(params_arg);
  l.spec = with_alpha(load_graph_spec(graph_file), l.params.alpha);
  const auto report = validate(l.spec);
  if (!report.valid()) throw InvalidGraph{report.violations};
  l.engine.emplace(build_equivalent_simple(l.spec), l.params.metric);
  return l;
}

void metadata(std::ostream& out, const Loaded& l) {
  out << "# " << kToolVersion << "\n";
  out << "# graph_hash: " << hex(graph_hash(l.spec)) << "\n";
  out << "# params: " << describe_params(l.params) << "\n";
}

struct NamedPoints {
  std::vector<std::string> names;
  std::vector<GraphPoint> points;
  std::map<std::string, std::size_t> index;
};

NamedPoints load_named_points(const EquivalentSimpleGraph& g, const std::string& file) {
  NamedPoints np;
  for (const auto& spec : load_points(file)) {
    if (np.index.count(spec.name)) throw ParseError("duplicate point name '" + spec.name + "'");
    np.index[spec.name] = np.names.size();
    np.names.push_back(spec.name);
    np.points.push_back(resolve_point(g, spec));
  }
  return np;
}

void join(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << "\n";
}

int cmd_validate(const std::string& graph_file, std::ostream& out) {
  const auto spec = load_graph_spec(graph_file);
  const auto report = validate(spec);
  for (const auto& [time, connected] : report.layer_connected)
    out << "# layer " << time << (connected ? " connected" : " disconnected") << "\n";
  if (report.valid()) {
    const auto g = build_equivalent_simple(spec);
    out << "valid: " << g.vertex_count() << " vertices, " << g.spatial_edges().size() << " spatial edges, "
        << g.temporal_edges().size() << " temporal edges, " << g.component_count() << " component(s)\n";
    return kOk;
  }
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  return kFailed;
}

int cmd_distance(const std::string& graph_file, const std::string& params, const std::string& points_file,
                 const std::vector<std::string>& pairs, std::ostream& out) {
  const auto l = load(graph_file, params);
  const auto& engine = *l.engine;
  const auto np = load_named_points(engine.graph(), points_file);

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (const auto& pair : pairs) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw ParseError("--pair expects 'name1,name2', got '" + pair + "'");
    const auto a = np.index.find(pair.substr(0, comma));
    const auto b = np.index.find(pair.substr(comma + 1));
    if (a == np.index.end() || b == np.index.end()) throw ParseError("--pair names unknown point: '" + pair + "'");
    todo.emplace_back(a->second, b->second);
  }
  if (pairs.empty())
    for (std::size_t i = 0; i < np.points.size(); ++i)
      for (std::size_t j = i; j < np.points.size(); ++j) todo.emplace_back(i, j);

  metadata(out, l);
  join(out, {"p1", "p2", "d", "vertex_part", "bridge_part", "wiener_part", "status"});
  const auto fmt = [](double v) { return format_significant(v, 12); };
  for (const auto& [i, j] : todo) {
    std::vector<std::string> row{np.names[i], np.names[j]};
    try {
      const auto d = engine.distance(np.points[i], np.points[j]);
      for (double v : {d.value, d.vertex_part, d.bridge_part, d.wiener_part}) row.push_back(fmt(v));
      row.emplace_back("ok");
    } catch (const ComponentMismatch&) {
      row.insert(row.end(), {"nan", "nan", "nan", "nan", "component_mismatch"});
    } catch (const DegenerateDistance&) {
      row.insert(row.end(), {"nan", "nan", "nan", "nan", "degenerate"});
    }
    join(out, row);
  }
  return kOk;
}

int cmd_gram(const std::string& graph_file, const std::string& params, const std::string& points_file,
             const std::string& family_text, std::ostream& out) {
  const auto l = load(graph_file, params);
  const auto family = CompletelyMonotone::parse(family_text);
  const auto np = load_named_points(l.engine->graph(), points_file);
  if (np.points.empty()) throw ParseError("points file is empty");
  const auto G = gram_matrix(*l.engine, family, np.points);
  const auto report = pd_check(G);

  metadata(out, l);
  out << "# family: " << family.describe() << "\n";
  std::vector<std::string> header{"point"};
  header.insert(header.end(), np.names.begin(), np.names.end());
  join(out, header);
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    std::vector<std::string> row{np.names[static_cast<std::size_t>(i)]};
    for (Eigen::Index j = 0; j < G.cols(); ++j) row.push_back(format_shortest(G(i, j)));
    join(out, row);
  }
  out << "# pd_check: " << to_string(report.kind) << " min_eigenvalue=" << format_shortest(report.min_eigenvalue)
      << " tolerance=" << format_shortest(report.tolerance) << "\n";
  return kOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad layer index '" + item + "' in --lifespan");
    }
  }
  return out;
}

int cmd_kt(const std::string& kind, double lambda, double rho, int m, const std::string& lifespan_text,
           std::ostream& out) {
  std::optional<TemporalKernelSpec> spec;
  std::vector<int> layers;
  if (kind == "ar1") {
    spec = Ar1Kernel{lambda};
    for (int t = 0; t < m; ++t) layers.push_back(t);
  } else if (kind == "circulant") {
    spec = CirculantKernel(rho, m);
    for (int t = 0; t < m; ++t) layers.push_back(t);
  } else {
    layers = parse_int_list(lifespan_text);
    spec = BlockAr1Kernel{lambda, layers, m};
  }
  out << "# " << kToolVersion << "\n";
  out << "# kind: " << kind << " lambda=" << format_shortest(lambda) << " rho=" << format_shortest(rho)
      << " m=" << m << "\n";
  join(out, {"tau1", "tau2", "k_t"});
  for (int a : layers)
    for (int b : layers) join(out, {std::to_string(a), std::to_string(b), format_shortest(kt_eval(*spec, a, b))});
  return kOk;
}

int cmd_sample(const std::string& graph_file, const std::string& params, const std::string& points_file,
               std::size_t n, std::uint64_t seed, std::ostream& out) {
  const auto l = load(graph_file, params);
  const auto np = load_named_points(l.engine->graph(), points_file);
  metadata(out, l);
  out << "# seed: " << seed << "\n";
  join(out, np.names);
  if (n == 0 || np.points.empty()) return kOk;
  const auto batch = sample_field(*l.engine, np.points, n, seed);
  for (Eigen::Index r = 0; r < batch.draws.rows(); ++r) {
    std::vector<std::string> row;
    for (Eigen::Index c = 0; c < batch.draws.cols(); ++c) row.push_back(format_shortest(batch.draws(r, c)));
    join(out, row);
  }
  return kOk;
}

FigureTable triangle_table() {
  FigureTable t{"fig5_epsilon", {"epsilon", "d_P_Q", "d_Q_R", "d_P_R", "violation"}, {}, {"fixture: epsilon graph, epsilon swept", "params: lambda=0.5"}};
  for (double eps : {1e-3, 1e-2, 1e-1, 1.0}) {
    const auto g = build_equivalent_simple(fixtures::epsilon_graph(eps));
    const MetricEngine engine(g, MetricParams{0.5, std::nullopt, std::nullopt, BridgeCoupling::temporal_kernel});
    const auto p = fixtures::epsilon_points(engine.graph());
    const double pq = engine.distance(p[0], p[1]).value;
    const double qr = engine.distance(p[1], p[2]).value;
    const double pr = engine.distance(p[0], p[2]).value;
    t.rows.push_back({eps, pq, qr, pr, pq + qr < pr ? 1.0 : 0.0});
  }
  return t;
}

int cmd_figure(const std::string& name, const std::string& out_dir, bool dev, std::ostream& out) {
  std::vector<FigureTable> tables;
  if (name == "fig5") {
    if (!dev) throw std::invalid_argument("fig5 is a development figure; pass --dev");
    tables.push_back(triangle_table());
  } else {
    tables = figure_tables(name);
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& t : tables) {
    const auto path = std::filesystem::path(out_dir) / (t.file_stem + ".csv");
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << "# " << kToolVersion << "\n# figure: " << name << "\n";
    for (const auto& note : t.notes) file << "# " << note << "\n";
    join(file, t.columns);
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (double v : row) cells.push_back(format_shortest(v));
      join(file, cells);
    }
    out << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian-variogram distances and kernels on time-evolving graphs", "tegraph"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string graph, params, points, family, out_dir, name, kind = "ar1", lifespan;
  std::vector<std::string> pairs;
  double lambda = 0.0, rho = 0.0;
  int m = 3;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  bool dev = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph file");
  validate_cmd->add_option("--graph", graph, "Graph JSON file")->required();

  auto* distance_cmd = app.add_subcommand("distance", "Distances between named points");
  distance_cmd->add_option("--graph", graph, "Graph JSON file")->required();
  distance_cmd->add_option("--params", params, "Parameter JSON file or inline object");
  distance_cmd->add_option("--points", points, "Points file")->required();
  auto* pair_opt = distance_cmd->add_option("--pair", pairs, "Pair 'name1,name2' (repeatable)");
  distance_cmd->add_flag("--grid", "All pairs i <= j (the default without --pair)")->excludes(pair_opt);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of psi(d) over the points");
  gram_cmd->add_option("--graph", graph, "Graph JSON file")->required();
  gram_cmd->add_option("--params", params, "Parameter JSON file or inline object");
  gram_cmd->add_option("--points", points, "Points file")->required();
  gram_cmd->add_option("--family", family, "e.g. power_exponential(1,1), dagum(1,2,0.5)")->required();

  auto* kt_cmd = app.add_subcommand("kt", "Temporal correlation table");
  kt_cmd->add_option("--kind", kind, "ar1 | circulant | block")
      ->check(CLI::IsMember({"ar1", "circulant", "block"}));
  kt_cmd->add_option("--lambda", lambda, "AR(1) coefficient");
  kt_cmd->add_option("--rho", rho, "Circulant coefficient");
  kt_cmd->add_option("--m", m, "Number of layers");
  kt_cmd->add_option("--lifespan", lifespan, "Comma-separated layers (block kind)");

  auto* sample_cmd = app.add_subcommand("sample", "Draws of the field at the points");
  sample_cmd->add_option("--graph", graph, "Graph JSON file")->required();
  sample_cmd->add_option("--params", params, "Parameter JSON file or inline object");
  sample_cmd->add_option("--points", points, "Points file")->required();
  sample_cmd->add_option("--n", n, "Number of draws");
  sample_cmd->add_option("--seed", seed, "Random seed");

  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV curves of a reproduced figure");
  figure_cmd->add_option("--name", name, "fig6 | fig9 | fig10 | fig11 | fig12")->required();
  figure_cmd->add_option("--out", out_dir, "Output directory")->required();
  figure_cmd->add_flag("--dev", dev, "Allow development figures (fig5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(graph, out);
    if (distance_cmd->parsed()) return cmd_distance(graph, params, points, pairs, out);
    if (gram_cmd->parsed()) return cmd_gram(graph, params, points, family, out);
    if (kt_cmd->parsed()) return cmd_kt(kind, lambda, rho, m, lifespan, out);
    if (sample_cmd->parsed()) return cmd_sample(graph, params, points, n, seed, out);
    if (figure_cmd->parsed()) return cmd_figure(name, out_dir, dev, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidGraph& e) {
    for (const auto& v : e.violations) err << "violation: " << v << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kMalformed;
}

}  // namespace tegraph::cli
