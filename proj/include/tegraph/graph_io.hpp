#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tegraph/graph_model.hpp"
#include "tegraph/metric.hpp"

namespace tegraph {

/// Malformed input document (as opposed to a well-formed but invalid graph).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph documents are JSON objects:
///
///   {"time_model": "linear" | "periodic", "m": 3,
///    "layers": [{"time": 0, "vertices": ["A","B"], "edges": [["A","B",1.0]]}, ...],
///    "temporal": {"policy": "markov_complete", "alpha": 1.0}
///              | {"policy": "explicit", "edges": [["A",0,"A",1,1.0], ...]}}
///
/// Edge weights default to 1 when omitted. Structural validity is not
/// checked here; see `validate`.
TimeEvolvingGraph parse_graph_spec(std::string_view text);
TimeEvolvingGraph load_graph_spec(const std::filesystem::path& path);
std::string serialize_graph_spec(const TimeEvolvingGraph& teg);

/// FNV-1a over the serialized document.
std::uint64_t graph_hash(const TimeEvolvingGraph& teg);

struct RunParams {
  MetricParams metric;
  /// Replaces the markov_complete alpha of the graph when set.
  std::optional<double> alpha;
};

/// {"lambda": .., "rho": .., "beta": .., "alpha": .., "coupling": "temporal_kernel" | "independent"}
RunParams parse_params(std::string_view text);
/// `arg` is either inline JSON (starting with '{') or a file path.
RunParams load_params(const std::string& arg);
TimeEvolvingGraph with_alpha(TimeEvolvingGraph teg, std::optional<double> alpha);
std::string describe_params(const RunParams& params);

/// One line of a points file:
///
///   name U V time delta   spatial edge (U,V) on layer `time` (linear) or at
///                         true time `time` (periodic); delta measured from U
///   name U U time delta   temporal edge of label U leaving layer `time`;
///                         delta measured forward in time
///   name U - time         vertex U
///
/// Blank lines and lines starting with '#' are skipped.
struct PointSpec {
  std::string name;
  std::string u;
  std::string v;
  double time = 0.0;
  double delta = 0.0;

  [[nodiscard]] bool is_vertex() const { return v.empty(); }
};

std::vector<PointSpec> parse_points(std::string_view text);
std::vector<PointSpec> load_points(const std::filesystem::path& path);

/// Throws std::invalid_argument when the line does not name a location of g.
GraphPoint resolve_point(const EquivalentSimpleGraph& g, const PointSpec& spec);

/// Shortest decimal string that parses back to the same double.
std::string format_shortest(double value);
std::string format_significant(double value, int digits);

std::string read_text(const std::filesystem::path& path);

}  // namespace tegraph
