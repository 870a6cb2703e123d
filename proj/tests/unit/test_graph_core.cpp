#include <catch2/catch_amalgamated.hpp>

#include "q3t/levels.hpp"
#include "q3t/stacked.hpp"
#include "test_util.hpp"

using namespace q3t;

TEST_CASE("building from stellations") {
  SECTION("bare triangle") {
    auto st = StackedTriangulation::build_from_stellations({0, 1, 2}, {});
    REQUIRE(st.vertex_count() == 3);
    REQUIRE(st.edge_count() == 3);
  }
  SECTION("one stellation gives K4") {
    auto st =
        StackedTriangulation::build_from_stellations({0, 1, 2}, {{3, {0, 1, 2}}});
    REQUIRE(st.vertex_count() == 4);
    REQUIRE(st.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) REQUIRE(st.graph().has_edge(u, v));
  }
  SECTION("stellating a consumed face fails") {
    std::vector<Stellation> s = {{3, {0, 1, 2}}, {4, {0, 1, 2}}};
    REQUIRE_THROWS_AS(StackedTriangulation::build_from_stellations({0, 1, 2}, s),
                      StellationTargetNotAFace);
  }
  SECTION("repeated apex fails") {
    std::vector<Stellation> s = {{3, {0, 1, 2}}, {3, {0, 1, 3}}};
    REQUIRE_THROWS_AS(StackedTriangulation::build_from_stellations({0, 1, 2}, s),
                      DuplicateApex);
  }
}

TEST_CASE("random_3tree determinism and counts") {
  SECTION("n=3 is the bare triangle") {
    auto st = random_3tree(3, 42);
    REQUIRE(st.vertex_count() == 3);
    REQUIRE(st.edge_count() == 3);
  }
  SECTION("n=4 is K4 regardless of seed") {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
      auto st = random_3tree(4, seed);
      REQUIRE(st.edge_count() == 6);
    }
  }
  SECTION("same (n, seed) gives identical edge sets") {
    auto a = random_3tree(100, 7);
    auto b = random_3tree(100, 7);
    REQUIRE(a.graph().edges() == b.graph().edges());
    auto c = random_3tree(100, 8);
    REQUIRE(!(a.graph().edges() == c.graph().edges()));
  }
  SECTION("m = 3n-6 across sizes") {
    for (int n : {3, 5, 10, 50, 137}) {
      auto st = random_3tree(n, 11);
      REQUIRE(st.edge_count() == 3 * n - 6);
    }
  }
  SECTION("too small") { REQUIRE_THROWS_AS(random_3tree(2, 0), TooSmall); }
}

TEST_CASE("Goldner-Harary builtin") {
  auto st = goldner_harary();
  REQUIRE(st.vertex_count() == 11);
  REQUIRE(st.edge_count() == 27);
  REQUIRE(st.stellations().size() == 8);

  // degree profile: three 8s (equator), two 6s (poles), six 3s
  std::vector<int> degs;
  for (Vertex v = 0; v < 11; ++v) degs.push_back(st.graph().degree(v));
  std::sort(degs.begin(), degs.end());
  REQUIRE(degs == std::vector<int>{3, 3, 3, 3, 3, 3, 6, 6, 8, 8, 8});

  // smallest non-Hamiltonian maximal planar graph
  REQUIRE(!oracle::has_hamiltonian_cycle(st.graph()));

  // feeding the edge list back through recognition succeeds with 8 stellations
  auto rec = recognize(st.graph());
  REQUIRE(rec.vertex_count() == 11);
  REQUIRE(rec.edge_count() == 27);
  REQUIRE(rec.stellations().size() == 8);
  REQUIRE(rec.graph() == st.graph());
}

TEST_CASE("recognition") {
  SECTION("K4") {
    SimpleGraph g(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    auto st = recognize(g);
    REQUIRE(st.stellations().size() == 1);
    REQUIRE(st.graph() == g);
  }
  SECTION("K5 is rejected") {
    SimpleGraph g(5);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    // K5 has 10 > 3n-6 edges and no degree-3 vertex at all
    REQUIRE_THROWS_AS(recognize(g), RecognizeError);
  }
  SECTION("octahedron is planar but not a 3-tree") {
    SimpleGraph g(6);  // K2,2,2
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (v != u + 3 || u >= 3) g.add_edge(u, v);
    REQUIRE(g.edge_count() == 12);
    REQUIRE_THROWS_AS(recognize(g), NotA3Tree);
  }
  SECTION("non-planar 3-tree is rejected by replay") {
    // triangle (1,2,3) with four apexes 0,4,5,6 all attached to it: a valid
    // 3-tree, but {0,4,5} x {1,2,3} is a K3,3
    SimpleGraph g(7);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    for (Vertex v : {4, 5, 6}) {
      g.add_edge(v, 1);
      g.add_edge(v, 2);
      g.add_edge(v, 3);
    }
    REQUIRE(g.edge_count() == 3 * 7 - 6);
    REQUIRE_THROWS_AS(recognize(g), NotPlanar3Tree);
  }
  SECTION("separating final triangle is re-rooted") {
    // K5 minus one edge with the shared triangle on high ids: the smallest-id
    // elimination ends at the separating triangle {2,3,4}.
    SimpleGraph g(5);
    for (Vertex v : {0, 1})
      for (Vertex w : {2, 3, 4}) g.add_edge(v, w);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    auto st = recognize(g);
    REQUIRE(st.graph() == g);
    REQUIRE(st.stellations().size() == 2);
  }
  SECTION("random 3-trees round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      int n = 5 + static_cast<int>(seed * 13 % 80);
      auto st = random_3tree(n, seed);
      auto rec = recognize(st.graph());
      REQUIRE(rec.graph() == st.graph());
      REQUIRE(static_cast<int>(rec.stellations().size()) == n - 3);
    }
  }
  SECTION("too small") {
    SimpleGraph g(2);
    g.add_edge(0, 1);
    REQUIRE_THROWS_AS(recognize(g), TooSmall);
  }
}
