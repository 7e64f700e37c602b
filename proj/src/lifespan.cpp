#include "tegraph/lifespan.hpp"

#include <algorithm>
#include <stdexcept>

namespace tegraph {
namespace {

bool present(const EquivalentSimpleGraph& g, const std::string& a, const std::string& b, int time) {
  return g.find_spatial_edge(a, b, time).has_value();
}

}  // namespace

bool Lifespan::contains(int time) const {
  return std::find(times.begin(), times.end(), time) != times.end();
}

std::size_t Lifespan::position(int time) const {
  auto it = std::find(times.begin(), times.end(), time);
  if (it == times.end()) throw std::out_of_range("time " + std::to_string(time) + " not in lifespan");
  return static_cast<std::size_t>(it - times.begin());
}

Lifespan lifespan(const EquivalentSimpleGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  if (e.kind != EdgeKind::spatial) throw std::invalid_argument("lifespan is defined for spatial edges only");
  const auto& a = g.vertex(e.u).label;
  const auto& b = g.vertex(e.v).label;
  const int anchor = g.vertex(e.u).time;
  const int m = g.layer_count();

  Lifespan span;
  if (g.time_model() == TimeModel::linear) {
    int lo = anchor;
    int hi = anchor;
    while (lo > 0 && present(g, a, b, lo - 1)) --lo;
    while (hi < m - 1 && present(g, a, b, hi + 1)) ++hi;
    for (int t = lo; t <= hi; ++t) span.times.push_back(t);
    return span;
  }

  // Periodic: grow the arc containing the anchor layer in both directions.
  int back = 0;
  while (back < m - 1 && present(g, a, b, ((anchor - back - 1) % m + m) % m)) ++back;
  if (back == m - 1) {
    span.full_cycle = true;
    for (int t = 0; t < m; ++t) span.times.push_back(t);
    return span;
  }
  int ahead = 0;
  while (back + ahead < m - 1 && present(g, a, b, (anchor + ahead + 1) % m)) ++ahead;
  const int start = ((anchor - back) % m + m) % m;
  for (int k = 0; k <= back + ahead; ++k) span.times.push_back((start + k) % m);
  return span;
}

LifePartition::LifePartition(const EquivalentSimpleGraph& g) : index_(g.edge_count(), 0) {
  std::vector<bool> assigned(g.edge_count(), false);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (assigned[id]) continue;
    const Edge& e = g.edge(id);
    Life life;
    life.id = lives_.size();
    life.kind = e.kind;
    if (e.kind == EdgeKind::temporal) {
      life.key = display_name(g.vertex(e.u)) + "~" + display_name(g.vertex(e.v));
      life.edges.push_back(id);
    } else {
      const auto& a = g.vertex(e.u).label;
      const auto& b = g.vertex(e.v).label;
      life.span = lifespan(g, id);
      life.key = a + "|" + b + "@";
      for (std::size_t k = 0; k < life.span.times.size(); ++k) {
        if (k) life.key += ',';
        life.key += std::to_string(life.span.times[k]);
      }
      for (int t : life.span.times) life.edges.push_back(*g.find_spatial_edge(a, b, t));
    }
    for (EdgeId member : life.edges) {
      assigned[member] = true;
      index_[member] = life.id;
    }
    lives_.push_back(std::move(life));
  }
}

LifePartition life_partition(const EquivalentSimpleGraph& g) { return LifePartition(g); }

}  // namespace tegraph
