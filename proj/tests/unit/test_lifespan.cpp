#include <doctest.h>

#include <set>

#include "support/random_graphs.hpp"
#include "tegraph/fixtures.hpp"
#include "tegraph/lifespan.hpp"

using namespace tegraph;

namespace {

std::vector<int> span_of(const EquivalentSimpleGraph& g, const char* a, const char* b, int t) {
  return lifespan(g, *g.find_spatial_edge(a, b, t)).times;
}

}  // namespace

TEST_SUITE("lifespan") {
  TEST_CASE("linear lifespans are maximal runs of consecutive layers") {
    const auto g = build_equivalent_simple(fixtures::linear_lifespan_example());
    CHECK(span_of(g, "A", "B", 1) == std::vector<int>{0, 1, 2});
    CHECK(span_of(g, "C", "E", 0) == std::vector<int>{0, 1});
    CHECK(span_of(g, "A", "C", 1) == std::vector<int>{1});
    // (B,C) exists on layers 0 and 2 but not 1: two separate lifespans
    CHECK(span_of(g, "B", "C", 0) == std::vector<int>{0});
    CHECK(span_of(g, "B", "C", 2) == std::vector<int>{2});
    CHECK_FALSE(lifespan(g, *g.find_spatial_edge("A", "B", 0)).full_cycle);

    const EdgeId temporal = g.temporal_edges().front();
    CHECK_THROWS_AS(lifespan(g, temporal), std::invalid_argument);
  }

  TEST_CASE("periodic lifespans follow the cycle through the wrap") {
    const auto g = build_equivalent_simple(fixtures::periodic_lifespan_example());
    const auto cd = lifespan(g, *g.find_spatial_edge("C", "D", 0));
    CHECK(cd.times == std::vector<int>{3, 0, 1});
    CHECK_FALSE(cd.full_cycle);
    CHECK(cd.position(3) == 0);
    CHECK(cd.position(1) == 2);
    CHECK_THROWS_AS((void)cd.position(2), std::out_of_range);

    const auto ab = lifespan(g, *g.find_spatial_edge("A", "B", 2));
    CHECK(ab.full_cycle);
    CHECK(ab.times.size() == 4);
    CHECK(span_of(g, "A", "D", 2) == std::vector<int>{2});
  }

  TEST_CASE("lives group edge copies and keep temporal edges as singletons") {
    const auto g = build_equivalent_simple(fixtures::linear_lifespan_example());
    const LifePartition lives(g);
    const auto ab0 = *g.find_spatial_edge("A", "B", 0);
    const auto ab2 = *g.find_spatial_edge("A", "B", 2);
    const auto bc0 = *g.find_spatial_edge("B", "C", 0);
    const auto bc2 = *g.find_spatial_edge("B", "C", 2);
    CHECK(lives.same_life(ab0, ab2));
    CHECK_FALSE(lives.same_life(bc0, bc2));
    CHECK_FALSE(lives.same_life(ab0, bc0));
    CHECK(lives.life_of(ab0).key == "A|B@0,1,2");
    const auto t = g.temporal_edges();
    CHECK_FALSE(lives.same_life(t[0], t[1]));
    CHECK(lives.life_of(t[0]).edges.size() == 1);
  }

  TEST_CASE("property: lives partition the edge set consistently with lifespans") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      testing::GraphShape shape;
      shape.model = trial % 2 ? TimeModel::periodic : TimeModel::linear;
      shape.m = testing::uniform_int(rng, 3, 8);
      shape.label_presence = 0.6;
      const auto g = build_equivalent_simple(testing::random_teg(rng, shape));
      const LifePartition lives(g);

      std::vector<int> hits(g.edge_count(), 0);
      for (const auto& life : lives.lives())
        for (EdgeId e : life.edges) ++hits[e];
      for (int h : hits) CHECK(h == 1);

      for (const auto& life : lives.lives()) {
        if (life.kind == EdgeKind::temporal) {
          CHECK(life.edges.size() == 1);
          continue;
        }
        CHECK(life.edges.size() == life.span.times.size());
        const auto& first = g.edge(life.edges.front());
        std::set<int> times;
        for (EdgeId e : life.edges) {
          const auto& edge = g.edge(e);
          CHECK(g.vertex(edge.u).label == g.vertex(first.u).label);
          CHECK(g.vertex(edge.v).label == g.vertex(first.v).label);
          times.insert(g.vertex(edge.u).time);
          CHECK(lifespan(g, e).times == life.span.times);
        }
        CHECK(times.size() == life.edges.size());
        // maximality: the layers just outside the span lack the edge
        const int m = g.layer_count();
        const auto& lbl_u = g.vertex(first.u).label;
        const auto& lbl_v = g.vertex(first.v).label;
        if (!life.span.full_cycle) {
          const int before = life.span.times.front() - 1;
          const int after = life.span.times.back() + 1;
          if (g.time_model() == TimeModel::periodic) {
            CHECK_FALSE(g.find_spatial_edge(lbl_u, lbl_v, (before + m) % m));
            CHECK_FALSE(g.find_spatial_edge(lbl_u, lbl_v, after % m));
          } else {
            if (before >= 0) CHECK_FALSE(g.find_spatial_edge(lbl_u, lbl_v, before));
            if (after < m) CHECK_FALSE(g.find_spatial_edge(lbl_u, lbl_v, after));
          }
        }
        // consecutive along the arc
        for (std::size_t i = 1; i < life.span.times.size(); ++i)
          CHECK((life.span.times[i] - life.span.times[i - 1] + m) % m == 1);
      }
    }
  }
}
