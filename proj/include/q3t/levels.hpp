#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "q3t/core.hpp"
#include "q3t/graph.hpp"
#include "q3t/stacked.hpp"

namespace q3t {

/// A connected piece of one peeling level, on global vertex ids.  Before
/// augmentation dummy_edges is empty; biconnect_augment fills it and updates
/// edges/internal_faces/outer_cycle accordingly.
struct OuterplaneComponent {
  int level = 0;
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted, includes dummy edges
  std::vector<Edge> dummy_edges;
  std::vector<std::array<Vertex, 3>> internal_faces;  // sorted triples, sorted
  std::vector<Vertex> outer_cycle;  // boundary order; all vertices once
  std::array<Vertex, 3> containment{-1, -1, -1};  // face in previous level

  std::unordered_map<Vertex, std::vector<Vertex>> adj;

  bool has_vertex(Vertex v) const { return adj.count(v) > 0; }
  bool has_edge(Vertex a, Vertex b) const {
    auto it = adj.find(a);
    if (it == adj.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
  }

  void rebuild_adj() {
    adj.clear();
    for (Vertex v : vertices) adj[v];
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : adj) {
      (void)v;
      std::sort(nb.begin(), nb.end());
    }
  }
};

namespace detail {

inline std::vector<std::array<Vertex, 3>> enumerate_triangles(
    const OuterplaneComponent& c) {
  std::vector<std::array<Vertex, 3>> tris;
  for (const Edge& e : c.edges) {
    const auto& nu = c.adj.at(e.u);
    const auto& nv = c.adj.at(e.v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) ++i;
      else if (nu[i] > nv[j]) ++j;
      else {
        if (nu[i] > e.v) tris.push_back({e.u, e.v, nu[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

/// Boundary edges of a maximal outerplanar piece: edges lying in at most one
/// triangle.
inline std::map<Edge, int> triangle_counts(
    const OuterplaneComponent& c, const std::vector<std::array<Vertex, 3>>& tris) {
  std::map<Edge, int> count;
  for (const Edge& e : c.edges) count[e] = 0;
  for (const auto& t : tris) {
    count[Edge(t[0], t[1])]++;
    count[Edge(t[0], t[2])]++;
    count[Edge(t[1], t[2])]++;
  }
  return count;
}

/// Checks that `c` restricted to `verts` is a triangulated polygon (maximal
/// outerplanar).  Appends human-readable violations.
inline void check_mop_block(const OuterplaneComponent& c,
                            const std::vector<Vertex>& verts,
                            std::vector<std::string>& out) {
  const int n = static_cast<int>(verts.size());
  std::unordered_set<Vertex> in(verts.begin(), verts.end());
  std::vector<Edge> edges;
  for (const Edge& e : c.edges)
    if (in.count(e.u) && in.count(e.v)) edges.push_back(e);
  const int m = static_cast<int>(edges.size());
  if (n <= 1) return;
  if (n == 2) {
    if (m != 1) out.push_back("2-vertex block without its edge");
    return;
  }
  if (m != 2 * n - 3) {
    out.push_back("block has " + std::to_string(m) + " edges, expected " +
                  std::to_string(2 * n - 3));
    return;
  }
  // triangles within the block
  std::unordered_map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nb] : adj) {
    (void)v;
    std::sort(nb.begin(), nb.end());
  }
  std::map<Edge, int> count;
  for (const Edge& e : edges) count[e] = 0;
  std::vector<std::array<Vertex, 3>> tris;
  for (const Edge& e : edges) {
    const auto& nu = adj[e.u];
    const auto& nv = adj[e.v];
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) ++i;
      else if (nu[i] > nv[j]) ++j;
      else {
        if (nu[i] > e.v) tris.push_back({e.u, e.v, nu[i]});
        ++i;
        ++j;
      }
    }
  }
  if (static_cast<int>(tris.size()) != n - 2) {
    out.push_back("block has " + std::to_string(tris.size()) +
                  " triangles, expected " + std::to_string(n - 2));
    return;
  }
  for (const auto& t : tris) {
    count[Edge(t[0], t[1])]++;
    count[Edge(t[0], t[2])]++;
    count[Edge(t[1], t[2])]++;
  }
  std::unordered_map<Vertex, std::vector<Vertex>> boundary;
  int boundary_edges = 0;
  for (const auto& [e, cnt] : count) {
    if (cnt == 0 || cnt > 2) {
      out.push_back("edge lies in " + std::to_string(cnt) + " triangles");
      return;
    }
    if (cnt == 1) {
      boundary[e.u].push_back(e.v);
      boundary[e.v].push_back(e.u);
      ++boundary_edges;
    }
  }
  if (boundary_edges != n) {
    out.push_back("boundary has " + std::to_string(boundary_edges) +
                  " edges, expected " + std::to_string(n));
    return;
  }
  for (const auto& [v, nb] : boundary) {
    (void)v;
    if (nb.size() != 2) {
      out.push_back("boundary vertex without exactly two boundary edges");
      return;
    }
  }
  if (static_cast<int>(boundary.size()) != n) {
    out.push_back("boundary does not touch every block vertex");
    return;
  }
  // walk the boundary cycle and peel ears against it
  std::unordered_map<Vertex, std::array<Vertex, 2>> cyc;
  for (auto& [v, nb] : boundary) cyc[v] = {nb[0], nb[1]};
  Vertex start = verts[0];
  std::vector<Vertex> cycle = {start};
  Vertex prev = start, cur = cyc[start][0];
  while (cur != start) {
    cycle.push_back(cur);
    Vertex nxt = cyc[cur][0] == prev ? cyc[cur][1] : cyc[cur][0];
    prev = cur;
    cur = nxt;
    if (static_cast<int>(cycle.size()) > n) break;
  }
  if (static_cast<int>(cycle.size()) != n) {
    out.push_back("boundary edges do not form a single Hamiltonian cycle");
    return;
  }
  // ear elimination on the polygon
  std::unordered_map<Vertex, Vertex> nxt, prv;
  std::unordered_map<Vertex, int> deg;
  for (const Edge& e : edges) {
    deg[e.u]++;
    deg[e.v]++;
  }
  for (int i = 0; i < n; ++i) {
    nxt[cycle[i]] = cycle[(i + 1) % n];
    prv[cycle[i]] = cycle[(i - 1 + n) % n];
  }
  auto is_ear = [&](Vertex v) {
    if (deg[v] != 2) return false;
    Vertex a = prv[v], b = nxt[v];
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  std::set<Vertex> ears;
  for (Vertex v : verts)
    if (is_ear(v)) ears.insert(v);
  int remaining = n;
  while (remaining > 3) {
    if (ears.empty()) {
      out.push_back("polygon ear elimination stuck");
      return;
    }
    Vertex v = *ears.begin();
    ears.erase(ears.begin());
    Vertex a = prv[v], b = nxt[v];
    nxt[a] = b;
    prv[b] = a;
    deg[a]--;
    deg[b]--;
    --remaining;
    for (Vertex w : {a, b}) {
      if (is_ear(w)) ears.insert(w);
      else ears.erase(w);
    }
  }
}

/// Biconnected components (blocks) as vertex lists; standard low-link DFS.
inline std::vector<std::vector<Vertex>> blocks_of(const OuterplaneComponent& c) {
  std::vector<std::vector<Vertex>> blocks;
  if (c.vertices.empty()) return blocks;
  std::unordered_map<Vertex, int> num, low;
  std::vector<std::pair<Vertex, Vertex>> stack;
  int counter = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next_idx;
  };
  for (Vertex root : c.vertices) {
    if (num.count(root)) continue;
    std::vector<Frame> frames;
    frames.push_back({root, -1, 0});
    num[root] = low[root] = counter++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = c.adj.at(f.v);
      if (f.next_idx < nb.size()) {
        Vertex w = nb[f.next_idx++];
        if (w == f.parent) continue;
        if (!num.count(w)) {
          stack.push_back({f.v, w});
          num[w] = low[w] = counter++;
          frames.push_back({w, f.v, 0});
        } else if (num[w] < num[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        Vertex v = f.v, parent = f.parent;
        frames.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= num[parent]) {
            // pop the block's edges up to and including (parent, v)
            std::set<Vertex> verts;
            while (!stack.empty()) {
              auto [a, b] = stack.back();
              stack.pop_back();
              verts.insert(a);
              verts.insert(b);
              if (a == parent && b == v) break;
            }
            blocks.emplace_back(verts.begin(), verts.end());
          }
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace detail

/// Violations are data; empty result means the component is a connected,
/// internally-triangulated outerplane graph (biconnected in addition when
/// `require_biconnected`).
inline std::vector<std::string> validate_outerplane_component(
    const OuterplaneComponent& c, bool require_biconnected) {
  std::vector<std::string> out;
  if (c.vertices.empty()) {
    out.push_back("empty component");
    return out;
  }
  // connectivity
  std::unordered_set<Vertex> seen;
  std::deque<Vertex> work = {c.vertices[0]};
  seen.insert(c.vertices[0]);
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    for (Vertex w : c.adj.at(v))
      if (seen.insert(w).second) work.push_back(w);
  }
  if (seen.size() != c.vertices.size()) {
    out.push_back("component is not connected");
    return out;
  }
  auto blocks = detail::blocks_of(c);
  if (require_biconnected && c.vertices.size() >= 3 && blocks.size() != 1)
    out.push_back("component is not biconnected");
  if (blocks.empty())
    detail::check_mop_block(c, c.vertices, out);  // single vertex / edge
  for (const auto& b : blocks) detail::check_mop_block(c, b, out);
  return out;
}

/// Adds dummy edges joining boundary neighbors of cut vertices until the
/// component is biconnected.  Internally triangulated outerplanarity is
/// preserved: every dummy edge closes a triangle with its cut vertex.
inline OuterplaneComponent biconnect_augment(const OuterplaneComponent& c) {
  {
    auto pre = validate_outerplane_component(c, false);
    if (!pre.empty())
      throw InternalStructureViolation(
          "biconnect_augment precondition: " + pre.front());
  }
  OuterplaneComponent out = c;
  if (out.vertices.size() >= 3) {
    while (true) {
      auto blocks = detail::blocks_of(out);
      if (blocks.size() <= 1) break;
      // locate a cut vertex: present in more than one block
      std::map<Vertex, std::vector<int>> owner;
      for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (Vertex v : blocks[b]) owner[v].push_back(b);
      Vertex cut = -1;
      for (const auto& [v, bs] : owner)
        if (bs.size() > 1) {
          cut = v;
          break;
        }
      if (cut == -1) throw AugmentationConflict("no cut vertex in split component");
      const auto& tris = detail::enumerate_triangles(out);
      auto counts = detail::triangle_counts(out, tris);
      // boundary neighbor of `cut` inside a block: edge (cut, x) on at most
      // one triangle of that block
      auto boundary_neighbor = [&](const std::vector<Vertex>& block) -> Vertex {
        std::unordered_set<Vertex> in(block.begin(), block.end());
        Vertex best = -1;
        for (Vertex x : out.adj.at(cut)) {
          if (!in.count(x)) continue;
          int cnt = 0;
          for (const auto& t : tris) {
            if ((t[0] == cut || t[1] == cut || t[2] == cut) &&
                (t[0] == x || t[1] == x || t[2] == x)) {
              bool inside = in.count(t[0]) && in.count(t[1]) && in.count(t[2]);
              if (inside) ++cnt;
            }
          }
          if (cnt <= 1 && (best == -1 || x < best)) best = x;
        }
        return best;
      };
      const auto& b1 = blocks[owner[cut][0]];
      const auto& b2 = blocks[owner[cut][1]];
      Vertex x = boundary_neighbor(b1);
      Vertex y = boundary_neighbor(b2);
      if (x == -1 || y == -1 || x == y || out.has_edge(x, y))
        throw AugmentationConflict("no valid boundary pair at cut vertex");
      Edge d(x, y);
      out.edges.insert(std::lower_bound(out.edges.begin(), out.edges.end(), d), d);
      out.dummy_edges.push_back(d);
      out.rebuild_adj();
    }
  }
  out.internal_faces = detail::enumerate_triangles(out);
  // boundary order
  out.outer_cycle.clear();
  if (out.vertices.size() <= 2) {
    out.outer_cycle = out.vertices;
  } else {
    auto counts = detail::triangle_counts(out, out.internal_faces);
    std::unordered_map<Vertex, std::vector<Vertex>> bnd;
    for (const auto& [e, cnt] : counts)
      if (cnt <= 1) {
        bnd[e.u].push_back(e.v);
        bnd[e.v].push_back(e.u);
      }
    Vertex start = out.vertices[0];
    if (!bnd.count(start) || bnd[start].size() != 2)
      throw AugmentationConflict("augmented boundary is not a cycle");
    Vertex prev = start;
    Vertex cur = std::min(bnd[start][0], bnd[start][1]);
    out.outer_cycle.push_back(start);
    while (cur != start) {
      out.outer_cycle.push_back(cur);
      if (bnd[cur].size() != 2)
        throw AugmentationConflict("augmented boundary is not a cycle");
      Vertex nxt = bnd[cur][0] == prev ? bnd[cur][1] : bnd[cur][0];
      prev = cur;
      cur = nxt;
      if (out.outer_cycle.size() > out.vertices.size()) break;
    }
    if (out.outer_cycle.size() != out.vertices.size())
      throw AugmentationConflict("augmented boundary misses vertices");
  }
  auto post = validate_outerplane_component(out, true);
  if (!post.empty())
    throw AugmentationConflict("augmentation produced invalid component: " +
                               post.front());
  return out;
}

/// Peeling of a triangulation into levels, with the component tree used by
/// the layout recursion.
struct LevelStructure {
  std::vector<int> level_of;
  int max_level = 0;
  std::vector<std::vector<Edge>> level_edges;    // index: level
  std::vector<std::vector<Edge>> binding_edges;  // index: lower level

  struct Node {
    OuterplaneComponent comp;  // pre-augmentation
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // node 0 is the outer triangle's component
  std::vector<std::vector<int>> nodes_by_level;
};

inline LevelStructure peel_levels(const StackedTriangulation& st,
                                  std::array<Vertex, 3> outer) {
  if (!st.is_face(outer)) throw NotAFace("outer triple is not a face");
  const SimpleGraph& g = st.graph();
  const int n = g.vertex_count();
  LevelStructure ls;
  ls.level_of.assign(n, -1);
  std::deque<Vertex> work;
  for (Vertex v : outer) {
    ls.level_of[v] = 0;
    work.push_back(v);
  }
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    for (Vertex w : g.neighbors(v))
      if (ls.level_of[w] == -1) {
        ls.level_of[w] = ls.level_of[v] + 1;
        work.push_back(w);
      }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (ls.level_of[v] == -1)
      throw InternalError("triangulation is not connected");
    ls.max_level = std::max(ls.max_level, ls.level_of[v]);
  }
  ls.level_edges.resize(ls.max_level + 1);
  ls.binding_edges.resize(std::max(ls.max_level, 1));
  for (const Edge& e : g.edges()) {
    int lu = ls.level_of[e.u], lv = ls.level_of[e.v];
    if (lu == lv) ls.level_edges[lu].push_back(e);
    else if (std::abs(lu - lv) == 1) ls.binding_edges[std::min(lu, lv)].push_back(e);
    else
      throw InternalError("edge spans non-adjacent levels");
  }
  ls.nodes_by_level.resize(ls.max_level + 1);

  // Recursive decomposition of the graphs induced by levels >= i.
  struct Job {
    std::vector<Vertex> verts;  // an H_i component, levels >= i
    int level;
    int parent;
  };
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<Job> jobs = {{all, 0, -1}};
  while (!jobs.empty()) {
    Job job = std::move(jobs.back());
    jobs.pop_back();
    const int i = job.level;
    std::vector<Vertex> mine;
    for (Vertex v : job.verts)
      if (ls.level_of[v] == i) mine.push_back(v);
    std::sort(mine.begin(), mine.end());
    if (mine.empty())
      throw InternalStructureViolation("component without vertices at its level");

    OuterplaneComponent comp;
    comp.level = i;
    comp.vertices = mine;
    std::unordered_set<Vertex> in(mine.begin(), mine.end());
    for (Vertex v : mine)
      for (Vertex w : g.neighbors(v))
        if (w > v && in.count(w)) comp.edges.emplace_back(v, w);
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.rebuild_adj();
    comp.internal_faces = detail::enumerate_triangles(comp);
    if (job.parent >= 0) {
      std::set<Vertex> below;
      for (Vertex v : mine)
        for (Vertex w : g.neighbors(v))
          if (ls.level_of[w] == i - 1) below.insert(w);
      if (below.size() != 3)
        throw InternalStructureViolation(
            "component does not attach to exactly three vertices");
      auto it = below.begin();
      Vertex a = *it++, b = *it++, cc = *it;
      if (!g.has_edge(a, b) || !g.has_edge(a, cc) || !g.has_edge(b, cc))
        throw InternalStructureViolation(
            "containing triple is not mutually adjacent");
      comp.containment = {a, b, cc};
    }
    {
      auto viol = validate_outerplane_component(comp, false);
      if (!viol.empty())
        throw InternalStructureViolation("level component invalid: " +
                                         viol.front());
    }
    // fill boundary order from the augmented copy
    comp.outer_cycle = biconnect_augment(comp).outer_cycle;

    int node_id = static_cast<int>(ls.nodes.size());
    ls.nodes.push_back({std::move(comp), job.parent, {}});
    if (job.parent >= 0) ls.nodes[job.parent].children.push_back(node_id);
    ls.nodes_by_level[i].push_back(node_id);

    // children: connected components of the vertices of deeper levels
    std::unordered_set<Vertex> deeper;
    for (Vertex v : job.verts)
      if (ls.level_of[v] > i) deeper.insert(v);
    std::unordered_set<Vertex> visited;
    for (Vertex v : job.verts) {
      if (ls.level_of[v] <= i || visited.count(v)) continue;
      std::vector<Vertex> comp_verts;
      std::deque<Vertex> bfs = {v};
      visited.insert(v);
      while (!bfs.empty()) {
        Vertex x = bfs.front();
        bfs.pop_front();
        comp_verts.push_back(x);
        for (Vertex w : g.neighbors(x))
          if (deeper.count(w) && !visited.count(w)) {
            visited.insert(w);
            bfs.push_back(w);
          }
      }
      std::sort(comp_verts.begin(), comp_verts.end());
      jobs.push_back({std::move(comp_verts), i + 1, node_id});
    }
  }
  // deterministic order of nodes per level and of children
  for (auto& per : ls.nodes_by_level)
    std::sort(per.begin(), per.end(), [&](int a, int b) {
      return ls.nodes[a].comp.vertices < ls.nodes[b].comp.vertices;
    });
  for (auto& node : ls.nodes)
    std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
      return ls.nodes[a].comp.vertices < ls.nodes[b].comp.vertices;
    });
  return ls;
}

inline LevelStructure peel_levels(const StackedTriangulation& st) {
  return peel_levels(st, st.base_triangle());
}

/// Pre-augmentation components of one level, shallow copies out of the tree.
inline std::vector<OuterplaneComponent> components_of_level(
    const LevelStructure& ls, int level) {
  if (level < 0 || level > ls.max_level)
    throw UsageError("level index out of range");
  std::vector<OuterplaneComponent> out;
  for (int id : ls.nodes_by_level[level]) out.push_back(ls.nodes[id].comp);
  return out;
}

}  // namespace q3t
