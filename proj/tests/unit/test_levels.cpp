#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "q3t/levels.hpp"
#include "q3t/stacked.hpp"
#include "test_util.hpp"

using namespace q3t;

TEST_CASE("peeling small triangulations") {
  SECTION("triangle: one level, no binding edges") {
    auto st = random_3tree(3, 0);
    auto ls = peel_levels(st);
    REQUIRE(ls.max_level == 0);
    REQUIRE(ls.level_edges[0].size() == 3);
    for (const auto& b : ls.binding_edges) REQUIRE(b.empty());
  }
  SECTION("K4: vertex 3 at level one with three binding edges") {
    auto st = random_3tree(4, 0);
    auto ls = peel_levels(st, {0, 1, 2});
    REQUIRE(ls.max_level == 1);
    REQUIRE(ls.level_of[3] == 1);
    REQUIRE(ls.binding_edges[0].size() == 3);
    REQUIRE(ls.level_edges[0].size() == 3);
    REQUIRE(ls.level_edges[1].empty());
  }
  SECTION("outer triple must be a face") {
    auto st = goldner_harary();
    REQUIRE_THROWS_AS(peel_levels(st, {0, 1, 10}), NotAFace);
  }
  SECTION("any face-tree leaf works as outer face") {
    auto st = goldner_harary();
    auto ls = peel_levels(st, {3, 4, 9});
    REQUIRE(ls.level_of[3] == 0);
    REQUIRE(ls.level_of[9] == 0);
  }
}

TEST_CASE("level/binding classification partitions the edges") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto st = random_3tree(60 + static_cast<int>(seed), seed);
    auto ls = peel_levels(st);
    std::size_t total = 0;
    for (const auto& le : ls.level_edges) total += le.size();
    for (const auto& be : ls.binding_edges) {
      total += be.size();
      for (const Edge& e : be)
        REQUIRE(std::abs(ls.level_of[e.u] - ls.level_of[e.v]) == 1);
    }
    REQUIRE(total == static_cast<std::size_t>(st.edge_count()));
  }
}

TEST_CASE("components of levels") {
  SECTION("level 0 is the outer triangle") {
    auto st = goldner_harary();
    auto ls = peel_levels(st);
    auto comps = components_of_level(ls, 0);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].vertices == std::vector<Vertex>{0, 1, 2});
    REQUIRE(comps[0].internal_faces.size() == 1);
  }
  SECTION("level 1 of K4 is a single vertex inside (0,1,2)") {
    auto st = random_3tree(4, 0);
    auto ls = peel_levels(st);
    auto comps = components_of_level(ls, 1);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].vertices == std::vector<Vertex>{3});
    REQUIRE(comps[0].containment == std::array<Vertex, 3>{0, 1, 2});
  }
  SECTION("all components of a large random 3-tree pass both validators") {
    auto st = random_3tree(200, 1);
    auto ls = peel_levels(st);
    for (int lvl = 0; lvl <= ls.max_level; ++lvl) {
      for (const auto& c : components_of_level(ls, lvl)) {
        REQUIRE(validate_outerplane_component(c, false).empty());
        REQUIRE(oracle::is_outerplanar(c));
        // weak dual of the internal faces is a forest (tree after augmenting)
        auto aug = biconnect_augment(c);
        REQUIRE(oracle::is_outerplanar(aug));
        std::map<Edge, int> shared;
        for (const auto& t : aug.internal_faces) {
          shared[Edge(t[0], t[1])]++;
          shared[Edge(t[0], t[2])]++;
          shared[Edge(t[1], t[2])]++;
        }
        std::size_t dual_edges = 0;
        for (const auto& [e, cnt] : shared) {
          REQUIRE(cnt <= 2);
          if (cnt == 2) ++dual_edges;
        }
        if (!aug.internal_faces.empty())
          REQUIRE(dual_edges == aug.internal_faces.size() - 1);
      }
    }
  }
}

TEST_CASE("biconnect_augment") {
  SECTION("already biconnected component is unchanged") {
    auto c = oracle::make_component({0, 1, 2}, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    auto aug = biconnect_augment(c);
    REQUIRE(aug.dummy_edges.empty());
    REQUIRE(aug.edges == c.edges);
    REQUIRE(aug.outer_cycle.size() == 3);
  }
  SECTION("two triangles sharing a cut vertex need one dummy edge") {
    auto c = oracle::make_component(
        {0, 1, 2, 3, 4},
        {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 4)});
    auto aug = biconnect_augment(c);
    REQUIRE(aug.dummy_edges.size() == 1);
    REQUIRE(validate_outerplane_component(aug, true).empty());
    // the dummy edge joins boundary neighbors of the cut vertex 2
    Edge d = aug.dummy_edges[0];
    REQUIRE(c.has_edge(d.u, 2));
    REQUIRE(c.has_edge(d.v, 2));
    REQUIRE(aug.internal_faces.size() == 3);
  }
  SECTION("single vertex and single edge are left alone") {
    auto v = oracle::make_component({7}, {});
    REQUIRE(biconnect_augment(v).dummy_edges.empty());
    auto e = oracle::make_component({3, 5}, {Edge(3, 5)});
    REQUIRE(biconnect_augment(e).dummy_edges.empty());
  }
  SECTION("a path becomes a fan of triangles") {
    auto c = oracle::make_component({0, 1, 2, 3},
                                    {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    auto aug = biconnect_augment(c);
    REQUIRE(validate_outerplane_component(aug, true).empty());
    REQUIRE(aug.edges.size() == 2 * 4 - 3);
    REQUIRE(oracle::is_outerplanar(aug));
  }
  SECTION("a star is triangulated around the hub") {
    auto c = oracle::make_component({0, 1, 2, 3},
                                    {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    auto aug = biconnect_augment(c);
    REQUIRE(validate_outerplane_component(aug, true).empty());
    REQUIRE(oracle::is_outerplanar(aug));
  }
  SECTION("idempotent on its own output") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto st = random_3tree(80, seed + 100);
      auto ls = peel_levels(st);
      for (int lvl = 0; lvl <= ls.max_level; ++lvl)
        for (const auto& c : components_of_level(ls, lvl)) {
          auto once = biconnect_augment(c);
          auto twice = biconnect_augment(once);
          REQUIRE(twice.dummy_edges == once.dummy_edges);
          REQUIRE(twice.edges == once.edges);
        }
    }
  }
}

TEST_CASE("containment triples are faces of the parent level") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto st = random_3tree(150, seed * 3 + 2);
    auto ls = peel_levels(st);
    for (const auto& node : ls.nodes) {
      if (node.parent < 0) continue;
      const auto& tri = node.comp.containment;
      const auto& parent = ls.nodes[node.parent].comp;
      for (Vertex v : tri) REQUIRE(parent.has_vertex(v));
      REQUIRE(parent.has_edge(tri[0], tri[1]));
      REQUIRE(parent.has_edge(tri[0], tri[2]));
      REQUIRE(parent.has_edge(tri[1], tri[2]));
      // the triple is an internal face of the parent component
      auto sorted = tri;
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(std::binary_search(parent.internal_faces.begin(),
                                 parent.internal_faces.end(), sorted));
    }
  }
}
