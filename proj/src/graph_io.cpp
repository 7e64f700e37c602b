#include "tegraph/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tegraph {
namespace {

using nlohmann::json;

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

double edge_weight(const json& arr, std::size_t index) {
  if (arr.size() <= index) return 1.0;
  if (!arr[index].is_number()) throw ParseError("edge weight must be a number");
  return arr[index].get<double>();
}

}  // namespace

TimeEvolvingGraph parse_graph_spec(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("graph document must be an object");

  TimeEvolvingGraph teg;
  const auto model = field<std::string>(doc, "time_model");
  if (model == "linear")
    teg.time_model = TimeModel::linear;
  else if (model == "periodic")
    teg.time_model = TimeModel::periodic;
  else
    throw ParseError("time_model must be 'linear' or 'periodic', got '" + model + "'");
  teg.m = field<int>(doc, "m");

  const auto layers = field<json>(doc, "layers");
  if (!layers.is_array()) throw ParseError("'layers' must be an array");
  for (const auto& item : layers) {
    if (!item.is_object()) throw ParseError("each layer must be an object");
    Layer layer;
    layer.time = field<int>(item, "time");
    layer.labels = field<std::vector<std::string>>(item, "vertices");
    if (item.contains("edges")) {
      const auto& edges = item.at("edges");
      if (!edges.is_array()) throw ParseError("layer edges must be an array");
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string())
          throw ParseError("spatial edge must be [\"U\", \"V\"] or [\"U\", \"V\", weight]");
        layer.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), edge_weight(e, 2)});
      }
    }
    teg.layers.push_back(std::move(layer));
  }

  const auto temporal = field<json>(doc, "temporal");
  if (!temporal.is_object()) throw ParseError("'temporal' must be an object");
  const auto policy = field<std::string>(temporal, "policy");
  if (policy == "markov_complete") {
    teg.temporal = MarkovComplete{temporal.contains("alpha") ? field<double>(temporal, "alpha") : 1.0};
  } else if (policy == "explicit") {
    ExplicitTemporal ex;
    for (const auto& e : field<json>(temporal, "edges")) {
      if (!e.is_array() || e.size() < 4 || e.size() > 5 || !e[0].is_string() || !e[1].is_number_integer() ||
          !e[2].is_string() || !e[3].is_number_integer())
        throw ParseError("temporal edge must be [\"U\", t, \"V\", s] or [\"U\", t, \"V\", s, weight]");
      ex.edges.push_back({Vertex{e[1].get<int>(), e[0].get<std::string>()},
                          Vertex{e[3].get<int>(), e[2].get<std::string>()}, edge_weight(e, 4)});
    }
    teg.temporal = std::move(ex);
  } else {
    throw ParseError("temporal policy must be 'markov_complete' or 'explicit', got '" + policy + "'");
  }
  return teg;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TimeEvolvingGraph load_graph_spec(const std::filesystem::path& path) { return parse_graph_spec(read_text(path)); }

std::string serialize_graph_spec(const TimeEvolvingGraph& teg) {
  json doc;
  doc["time_model"] = std::string(to_string(teg.time_model));
  doc["m"] = teg.m;
  json layers = json::array();
  for (const auto& layer : teg.layers) {
    json edges = json::array();
    for (const auto& e : layer.edges) edges.push_back(json::array({e.u, e.v, e.weight}));
    layers.push_back({{"time", layer.time}, {"vertices", layer.labels}, {"edges", edges}});
  }
  doc["layers"] = layers;
  if (const auto* mc = std::get_if<MarkovComplete>(&teg.temporal)) {
    doc["temporal"] = {{"policy", "markov_complete"}, {"alpha", mc->alpha}};
  } else {
    json edges = json::array();
    for (const auto& e : std::get<ExplicitTemporal>(teg.temporal).edges)
      edges.push_back(json::array({e.u.label, e.u.time, e.v.label, e.v.time, e.weight}));
    doc["temporal"] = {{"policy", "explicit"}, {"edges", edges}};
  }
  return doc.dump(2) + "\n";
}

std::uint64_t graph_hash(const TimeEvolvingGraph& teg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_graph_spec(teg)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunParams parse_params(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("parameters must be a JSON object");
  RunParams p;
  for (const auto& [key, value] : doc.items()) {
    if (key == "coupling") continue;
    if (key != "lambda" && key != "rho" && key != "beta" && key != "alpha")
      throw ParseError("unknown parameter '" + key + "'");
    if (!value.is_number()) throw ParseError("parameter '" + key + "' must be a number");
  }
  if (doc.contains("lambda")) p.metric.lambda = doc["lambda"].get<double>();
  if (doc.contains("rho")) p.metric.rho = doc["rho"].get<double>();
  if (doc.contains("beta")) p.metric.beta = doc["beta"].get<double>();
  if (doc.contains("alpha")) p.alpha = doc["alpha"].get<double>();
  if (doc.contains("coupling")) {
    const auto c = field<std::string>(doc, "coupling");
    if (c == "independent")
      p.metric.coupling = BridgeCoupling::independent;
    else if (c != "temporal_kernel")
      throw ParseError("coupling must be 'temporal_kernel' or 'independent'");
  }
  return p;
}

RunParams load_params(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_params(arg);
  return parse_params(read_text(arg));
}

TimeEvolvingGraph with_alpha(TimeEvolvingGraph teg, std::optional<double> alpha) {
  if (!alpha) return teg;
  auto* mc = std::get_if<MarkovComplete>(&teg.temporal);
  if (!mc) throw std::invalid_argument("alpha only applies to markov_complete temporal edges");
  mc->alpha = *alpha;
  return teg;
}

std::string describe_params(const RunParams& params) {
  std::ostringstream out;
  out << "lambda=" << format_shortest(params.metric.lambda);
  if (params.metric.rho) out << " rho=" << format_shortest(*params.metric.rho);
  if (params.metric.beta) out << " beta=" << format_shortest(*params.metric.beta);
  if (params.alpha) out << " alpha=" << format_shortest(*params.alpha);
  if (params.metric.coupling == BridgeCoupling::independent) out << " coupling=independent";
  return out.str();
}

std::vector<PointSpec> parse_points(std::string_view text) {
  std::vector<PointSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    const auto where = "points line " + std::to_string(number);
    const auto number_at = [&](std::size_t i) {
      double value = 0.0;
      const auto& s = tok[i];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(where + ": bad number '" + s + "'");
      return value;
    };
    PointSpec p;
    if (tok.size() == 4 && tok[2] == "-") {
      p = {tok[0], tok[1], "", number_at(3), 0.0};
    } else if (tok.size() == 5 && tok[2] != "-") {
      p = {tok[0], tok[1], tok[2], number_at(3), number_at(4)};
    } else {
      throw ParseError(where + ": expected 'name U V time delta' or 'name U - time'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PointSpec> load_points(const std::filesystem::path& path) { return parse_points(read_text(path)); }

GraphPoint resolve_point(const EquivalentSimpleGraph& g, const PointSpec& spec) {
  const bool periodic = g.time_model() == TimeModel::periodic;
  const int m = g.layer_count();
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("point '" + spec.name + "': " + why);
  };
  if (!std::isfinite(spec.time) || spec.time < 0.0) fail("time must be a non-negative number");
  const auto layer_of = [&](double t) {
    const auto whole = static_cast<long long>(std::floor(t + 1e-9));
    if (!periodic) {
      if (std::abs(t - static_cast<double>(whole)) > 1e-9) fail("linear layers are integers");
      return static_cast<int>(whole);
    }
    return static_cast<int>(whole % m);
  };
  const std::optional<double> true_time = periodic ? std::optional<double>(spec.time) : std::nullopt;

  if (spec.is_vertex()) {
    const auto v = g.find_vertex(spec.u, layer_of(spec.time));
    if (!v) fail("no vertex " + spec.u + " at time " + format_shortest(spec.time));
    return GraphPoint::at_vertex(*v, true_time);
  }
  if (!(spec.delta >= 0.0 && spec.delta <= 1.0)) fail("delta must lie in [0,1]");

  if (spec.u != spec.v) {
    const int layer = layer_of(spec.time);
    const auto e = g.find_spatial_edge(spec.u, spec.v, layer);
    if (!e) fail("no edge (" + spec.u + "," + spec.v + ") on layer " + std::to_string(layer));
    const bool from_u = g.vertex(g.edge(*e).u).label == spec.u;
    return GraphPoint::on_edge(*e, from_u ? spec.delta : 1.0 - spec.delta, true_time);
  }

  const int start = layer_of(spec.time);
  if (periodic && std::abs(spec.time - std::round(spec.time)) > 1e-9)
    fail("temporal points give the integer start time of their step");
  const int next = periodic ? (start + 1) % m : start + 1;
  const auto a = g.find_vertex(spec.u, start);
  const auto b = g.find_vertex(spec.u, next);
  const auto e = (a && b) ? g.find_edge(*a, *b) : std::nullopt;
  if (!e) fail("no temporal edge for " + spec.u + " leaving layer " + std::to_string(start));
  const double delta = g.runs_forward(*e) ? spec.delta : 1.0 - spec.delta;
  const std::optional<double> t = periodic ? std::optional<double>(std::round(spec.time) + spec.delta) : std::nullopt;
  return GraphPoint::on_edge(*e, delta, t);
}

std::string format_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return std::string(buf, ptr);
}

}  // namespace tegraph
