#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "q3t/core.hpp"
#include "q3t/graph.hpp"

namespace q3t {

struct Stellation {
  Vertex apex;
  std::array<Vertex, 3> face;

  bool operator==(const Stellation&) const = default;
};

namespace detail {

inline std::array<Vertex, 3> sorted_triple(std::array<Vertex, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline std::uint64_t triple_key(std::array<Vertex, 3> t) {
  std::sort(t.begin(), t.end());
  return static_cast<std::uint64_t>(t[0]) |
         (static_cast<std::uint64_t>(t[1]) << 21) |
         (static_cast<std::uint64_t>(t[2]) << 42);
}

}  // namespace detail

/// A planar 3-tree represented as base triangle + ordered stellation history.
/// The face tree is implicit in the history; the set of current leaf faces is
/// kept for queries.  The base triangle doubles as the default outer face.
class StackedTriangulation {
 public:
  static StackedTriangulation build_from_stellations(
      std::array<Vertex, 3> base, const std::vector<Stellation>& stellations) {
    StackedTriangulation st;
    st.base_ = base;
    const int n = 3 + static_cast<int>(stellations.size());
    if (base[0] == base[1] || base[0] == base[2] || base[1] == base[2])
      throw UsageError("base triangle vertices must be distinct");
    for (Vertex v : base)
      if (v < 0 || v >= n) throw UsageError("base vertex id out of range 0..n-1");
    st.graph_ = SimpleGraph(n);
    st.graph_.add_edge(base[0], base[1]);
    st.graph_.add_edge(base[0], base[2]);
    st.graph_.add_edge(base[1], base[2]);
    std::vector<bool> present(n, false);
    for (Vertex v : base) present[v] = true;
    st.leaves_.insert(detail::triple_key(base));
    for (const Stellation& s : stellations) {
      if (s.apex < 0 || s.apex >= n)
        throw UsageError("apex id out of range 0..n-1");
      if (present[s.apex]) throw DuplicateApex("apex id already present");
      auto key = detail::triple_key(s.face);
      if (!st.leaves_.count(key))
        throw StellationTargetNotAFace("stellation target is not a current face");
      st.leaves_.erase(key);
      for (Vertex c : s.face) st.graph_.add_edge(s.apex, c);
      // the stellated leaf is replaced by three child faces
      st.leaves_.insert(detail::triple_key({s.apex, s.face[1], s.face[2]}));
      st.leaves_.insert(detail::triple_key({s.apex, s.face[0], s.face[2]}));
      st.leaves_.insert(detail::triple_key({s.apex, s.face[0], s.face[1]}));
      present[s.apex] = true;
      st.stellations_.push_back(s);
    }
    return st;
  }

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  const std::array<Vertex, 3>& base_triangle() const { return base_; }
  const std::vector<Stellation>& stellations() const { return stellations_; }
  const SimpleGraph& graph() const { return graph_; }

  /// True iff the triple bounds a face of the embedded triangulation (an
  /// interior face-tree leaf, or the outer face = base triangle).
  bool is_face(std::array<Vertex, 3> t) const {
    return leaves_.count(detail::triple_key(t)) > 0 ||
           detail::sorted_triple(t) == detail::sorted_triple(base_);
  }

 private:
  StackedTriangulation() = default;

  std::array<Vertex, 3> base_{0, 1, 2};
  std::vector<Stellation> stellations_;
  SimpleGraph graph_;
  std::unordered_set<std::uint64_t> leaves_;
};

/// Uniform random planar 3-tree: base (0,1,2); each apex k = 3..n-1 stellates
/// a uniformly random current face-tree leaf.  Deterministic in (n, seed).
inline StackedTriangulation random_3tree(int n, std::uint64_t seed) {
  if (n < 3) throw TooSmall("need at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::array<Vertex, 3>> leaves = {{0, 1, 2}};
  std::vector<Stellation> stells;
  stells.reserve(n - 3);
  for (Vertex apex = 3; apex < n; ++apex) {
    std::size_t i = static_cast<std::size_t>(rng() % leaves.size());
    auto f = leaves[i];
    stells.push_back({apex, f});
    leaves[i] = {apex, f[0], f[1]};
    leaves.push_back({apex, f[0], f[2]});
    leaves.push_back({apex, f[1], f[2]});
  }
  return StackedTriangulation::build_from_stellations({0, 1, 2}, stells);
}

/// The Goldner-Harary graph (11 vertices, 27 edges): every face of the
/// triangular bipyramid stellated once.
inline StackedTriangulation goldner_harary() {
  // Poles 0 and 5, equator 1,3,4.  Vertex 2 stellates bipyramid face (0,1,3)
  // and serves as a base corner, so the base triangle (0,1,2) is a face of
  // the final graph; 6..10 stellate the remaining bipyramid faces.
  std::vector<Stellation> stells = {
      {3, {0, 1, 2}}, {4, {0, 1, 3}}, {5, {1, 3, 4}},  {6, {0, 3, 4}},
      {7, {0, 1, 4}}, {8, {1, 3, 5}}, {9, {3, 4, 5}},  {10, {1, 4, 5}},
  };
  return StackedTriangulation::build_from_stellations({0, 1, 2}, stells);
}

/// Planar-3-tree recognition by simplicial elimination plus stellation
/// replay.  The reversed elimination is first replayed against the face
/// multiset of a sphere embedding (the initial triangle bounds two faces);
/// failure there means the input is a non-planar 3-tree or no 3-tree at all.
/// If the plain plane replay rooted at the elimination's final triangle is
/// blocked (that triangle separates the graph), the elimination is re-run
/// rooted at a face that survives, which always exists for planar 3-trees.
inline StackedTriangulation recognize(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw TooSmall("need at least 3 vertices");
  const long long want_m = 3LL * n - 6;
  if (g.edge_count() != want_m)
    throw NotA3Tree("a 3-tree on n vertices has exactly 3n-6 edges");

  // One elimination pass.  `avoid` pins three vertices that must survive.
  auto eliminate = [&](const std::array<Vertex, 3>* avoid,
                       std::vector<Stellation>& out_rev,
                       std::array<Vertex, 3>& out_base) -> bool {
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
      adj[e.u].insert(e.v);
      adj[e.v].insert(e.u);
    }
    auto pinned = [&](Vertex v) {
      return avoid && (v == (*avoid)[0] || v == (*avoid)[1] || v == (*avoid)[2]);
    };
    auto simplicial3 = [&](Vertex v) {
      if (adj[v].size() != 3) return false;
      auto it = adj[v].begin();
      Vertex a = *it++, b = *it++, c = *it;
      return adj[a].count(b) && adj[a].count(c) && adj[b].count(c);
    };
    std::set<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
      if (!pinned(v) && simplicial3(v)) candidates.insert(v);
    int alive = n;
    std::vector<bool> dead(n, false);
    out_rev.clear();
    while (alive > 3) {
      if (candidates.empty()) return false;
      Vertex v = *candidates.begin();
      candidates.erase(candidates.begin());
      auto it = adj[v].begin();
      std::array<Vertex, 3> f = {*it, *(std::next(it)), *(std::next(it, 2))};
      out_rev.push_back({v, f});
      for (Vertex w : adj[v]) adj[w].erase(v);
      adj[v].clear();
      dead[v] = true;
      --alive;
      // degrees of f's vertices dropped; their simplicial status may change,
      // and neighbors of f-vertices never gain edges, so rechecking f suffices
      for (Vertex w : f) {
        if (!dead[w] && !pinned(w) && simplicial3(w))
          candidates.insert(w);
        else
          candidates.erase(w);
      }
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!dead[v]) rest.push_back(v);
    out_base = {rest[0], rest[1], rest[2]};
    return g.has_edge(rest[0], rest[1]) && g.has_edge(rest[0], rest[2]) &&
           g.has_edge(rest[1], rest[2]);
  };

  std::vector<Stellation> rev;
  std::array<Vertex, 3> base;
  if (!eliminate(nullptr, rev, base))
    throw NotA3Tree("no simplicial degree-3 vertex available");
  std::reverse(rev.begin(), rev.end());

  // Sphere replay: the base triple starts with both of its sides available.
  std::unordered_map<std::uint64_t, int> avail;
  avail[detail::triple_key(base)] = 2;
  for (const Stellation& s : rev) {
    auto key = detail::triple_key(s.face);
    auto it = avail.find(key);
    if (it == avail.end() || it->second == 0)
      throw NotPlanar3Tree("stellation replay hit a non-face triple");
    if (--it->second == 0) avail.erase(it);
    avail[detail::triple_key({s.apex, s.face[1], s.face[2]})]++;
    avail[detail::triple_key({s.apex, s.face[0], s.face[2]})]++;
    avail[detail::triple_key({s.apex, s.face[0], s.face[1]})]++;
  }

  auto plane_build = [&](std::array<Vertex, 3> b, const std::vector<Stellation>& ss)
      -> StackedTriangulation {
    StackedTriangulation st = StackedTriangulation::build_from_stellations(b, ss);
    if (!(st.graph() == g))
      throw InternalError("recognition replay did not reconstruct the input");
    return st;
  };

  try {
    return plane_build(base, rev);
  } catch (const StellationTargetNotAFace&) {
    // The final triangle separates the graph; re-root at a surviving face.
  }
  // Pick the lexicographically smallest face still available after the
  // sphere replay and eliminate again with its vertices pinned.
  std::array<Vertex, 3> root = {-1, -1, -1};
  for (const auto& [key, cnt] : avail) {
    (void)cnt;
    std::array<Vertex, 3> t = {static_cast<Vertex>(key & 0x1FFFFF),
                               static_cast<Vertex>((key >> 21) & 0x1FFFFF),
                               static_cast<Vertex>((key >> 42) & 0x1FFFFF)};
    if (root[0] == -1 || t < root) root = t;
  }
  std::vector<Stellation> rev2;
  std::array<Vertex, 3> base2;
  if (!eliminate(&root, rev2, base2) ||
      detail::sorted_triple(base2) != detail::sorted_triple(root))
    throw InternalError("re-rooted elimination failed on a planar 3-tree");
  std::reverse(rev2.begin(), rev2.end());
  return plane_build(base2, rev2);
}

}  // namespace q3t
