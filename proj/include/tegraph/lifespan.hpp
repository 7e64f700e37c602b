#pragma once

#include <span>
#include <string>
#include <vector>

#include "tegraph/graph_model.hpp"

namespace tegraph {

/// Maximal connected run of layers on which a spatial edge persists.
/// `times` lists the layers in traversal order: ascending for linear time,
/// cycle order from the start of the arc for periodic time.
struct Lifespan {
  std::vector<int> times;
  bool full_cycle = false;

  [[nodiscard]] bool contains(int time) const;
  /// Position of `time` along the arc. Throws std::out_of_range.
  [[nodiscard]] std::size_t position(int time) const;
};

/// Throws std::invalid_argument for temporal edges.
Lifespan lifespan(const EquivalentSimpleGraph& g, EdgeId e);

/// One class of the life partition: the copies of a spatial edge across its
/// lifespan, or a single temporal edge.
struct Life {
  std::size_t id = 0;
  EdgeKind kind = EdgeKind::spatial;
  /// Stable identity, e.g. "A|B@0,1,2" or "A0~A1".
  std::string key;
  Lifespan span;
  std::vector<EdgeId> edges;
};

class LifePartition {
 public:
  LifePartition() = default;
  explicit LifePartition(const EquivalentSimpleGraph& g);

  [[nodiscard]] std::span<const Life> lives() const { return lives_; }
  [[nodiscard]] const Life& life_of(EdgeId e) const { return lives_.at(index_.at(e)); }
  [[nodiscard]] std::size_t life_index(EdgeId e) const { return index_.at(e); }
  [[nodiscard]] bool same_life(EdgeId a, EdgeId b) const { return index_.at(a) == index_.at(b); }

 private:
  std::vector<Life> lives_;
  std::vector<std::size_t> index_;
};

LifePartition life_partition(const EquivalentSimpleGraph& g);

}  // namespace tegraph
