#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "q3t/core.hpp"
#include "q3t/leveled.hpp"
#include "q3t/levels.hpp"
#include "q3t/patterns.hpp"
#include "q3t/queue_layout.hpp"
#include "q3t/stacked.hpp"

namespace q3t {

// Queue indices are fixed globally: 0,1 for level edges (spans one and two),
// 2 for binding edges at the anchor, 3 at the top, 4 at the bottom vertex of
// the child's containing face.
inline constexpr int kQueueAnchor = 2;
inline constexpr int kQueueTop = 3;
inline constexpr int kQueueBottom = 4;

struct TwoLevelChild {
  std::array<Vertex, 3> face;        // containing face, sorted triple
  std::vector<Edge> binding_edges;   // (face corner, child vertex) pairs
};

struct TwoLevelResult {
  OuterplaneComponent augmented;
  LeveledLayout leveled;
  TwoQueueOrder base;                 // order and level-edge queues (0/1)
  std::vector<int> child_order;       // indices into the children argument
  std::map<Edge, int> binding_queues; // 2/3/4
};

/// One application of the two-level algorithm: lay out the component, assign
/// binding edges by the face role of their level-i endpoint, and fix the
/// relative order of the children lexicographically by the positions of
/// (anchor, top, bottom) of their containing faces.
inline TwoLevelResult two_level_layout(const OuterplaneComponent& c,
                                       const std::vector<TwoLevelChild>& children,
                                       LeveledLayoutStats* stats = nullptr) {
  TwoLevelResult res;
  res.augmented = biconnect_augment(c);
  res.leveled = leveled_layout(res.augmented, stats);
  res.base = two_queue_order(res.augmented, res.leveled);

  std::unordered_map<Vertex, int> pos;
  for (int i = 0; i < static_cast<int>(res.base.order.size()); ++i)
    pos[res.base.order[i]] = i;

  struct Key {
    int a, t, b, idx;
  };
  std::vector<Key> keys;
  for (int i = 0; i < static_cast<int>(children.size()); ++i) {
    const auto& ch = children[i];
    FaceRoles roles;
    try {
      roles = face_roles(res.leveled, ch.face);
    } catch (const NotAFace&) {
      throw ChildNotInFace("child containment face is not a face of its level");
    }
    for (const Edge& be : ch.binding_edges) {
      Vertex corner = pos.count(be.u) ? be.u : be.v;
      if (!pos.count(corner))
        throw ChildNotInFace("binding edge misses the component");
      int q;
      if (corner == roles.anchor) q = kQueueAnchor;
      else if (corner == roles.top) q = kQueueTop;
      else if (corner == roles.bottom) q = kQueueBottom;
      else
        throw ChildNotInFace("binding edge endpoint outside containing face");
      res.binding_queues[be] = q;
    }
    keys.push_back({pos[roles.anchor], pos[roles.top], pos[roles.bottom], i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.t != y.t) return x.t < y.t;
    return x.b < y.b;
  });
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (keys[i - 1].a == keys[i].a && keys[i - 1].t == keys[i].t &&
        keys[i - 1].b == keys[i].b)
      throw InternalError("two distinct containing faces share all three roles");
  for (const Key& k : keys) res.child_order.push_back(k.idx);
  return res;
}

struct FiveQueueOptions {
  bool keep_dummy = false;
  bool self_check = true;
};

struct FiveQueueStats {
  LeveledLayoutStats leveled;  // aggregated over all components
  int components = 0;
};

namespace detail {

struct NodeLayout {
  // level_seqs[j] holds the vertices of peeling level (node level + j), in
  // their final relative order
  std::vector<std::vector<Vertex>> level_seqs;
};

class FiveQueueBuilder {
 public:
  FiveQueueBuilder(const SimpleGraph& g, const LevelStructure& ls,
                   FiveQueueStats* stats)
      : g_(g), ls_(ls), stats_(stats) {}

  NodeLayout build(int node_id) {
    const auto& node = ls_.nodes[node_id];
    const int level = node.comp.level;

    std::vector<NodeLayout> child_layouts;
    std::vector<TwoLevelChild> children;
    for (int cid : node.children) {
      child_layouts.push_back(build(cid));
      const auto& ccomp = ls_.nodes[cid].comp;
      TwoLevelChild ch;
      ch.face = ccomp.containment;
      std::sort(ch.face.begin(), ch.face.end());
      for (Vertex w : ccomp.vertices)
        for (Vertex b : g_.neighbors(w))
          if (ls_.level_of[b] == level) ch.binding_edges.emplace_back(b, w);
      std::sort(ch.binding_edges.begin(), ch.binding_edges.end());
      children.push_back(std::move(ch));
    }

    LeveledLayoutStats lstats;
    TwoLevelResult two = two_level_layout(node.comp, children, &lstats);
    if (stats_) {
      stats_->leveled.placements += lstats.placements;
      stats_->leveled.backtracks += lstats.backtracks;
      stats_->leveled.restarts += lstats.restarts;
      stats_->components += 1;
    }
    for (const auto& [e, q] : two.base.queue_of) queue_of_[e] = q;
    for (const Edge& d : two.augmented.dummy_edges) dummy_.insert(d);
    for (const auto& [e, q] : two.binding_queues) queue_of_[e] = q;

    NodeLayout out;
    out.level_seqs.push_back(two.base.order);
    for (int ci : two.child_order) {
      const NodeLayout& cl = child_layouts[ci];
      for (std::size_t j = 0; j < cl.level_seqs.size(); ++j) {
        if (out.level_seqs.size() <= j + 1) out.level_seqs.resize(j + 2);
        auto& dst = out.level_seqs[j + 1];
        dst.insert(dst.end(), cl.level_seqs[j].begin(), cl.level_seqs[j].end());
      }
    }
    return out;
  }

  std::map<Edge, int> queue_of_;
  std::set<Edge> dummy_;

 private:
  const SimpleGraph& g_;
  const LevelStructure& ls_;
  FiveQueueStats* stats_;
};

}  // namespace detail

/// Theorem-1 algorithm: peeling into levels, two-level layouts bottom-up,
/// and interval assembly.  At most five queues; level edges in {0,1},
/// binding edges in {2,3,4}.
inline QueueLayout five_queue_layout(const StackedTriangulation& st,
                                     std::array<Vertex, 3> outer,
                                     const FiveQueueOptions& opts = {},
                                     FiveQueueStats* stats = nullptr) {
  LevelStructure ls = peel_levels(st, outer);
  detail::FiveQueueBuilder builder(st.graph(), ls, stats);
  detail::NodeLayout root = builder.build(0);

  QueueLayout layout;
  int pos = 0;
  for (std::size_t j = 0; j < root.level_seqs.size(); ++j) {
    const auto& seq = root.level_seqs[j];
    layout.intervals.push_back(
        {static_cast<int>(j), pos, pos + static_cast<int>(seq.size())});
    for (Vertex v : seq) layout.order.push_back(v);
    pos += static_cast<int>(seq.size());
  }
  for (const auto& [e, q] : builder.queue_of_) {
    if (!opts.keep_dummy && builder.dummy_.count(e)) continue;
    layout.queue_of[e] = q;
  }
  if (opts.self_check && !opts.keep_dummy) {
    if (auto bad = is_valid_queue_layout(st.graph(), layout, 5))
      throw InternalError("five_queue_layout produced an invalid layout: " +
                          bad->reason);
  }
  return layout;
}

inline QueueLayout five_queue_layout(const StackedTriangulation& st,
                                     const FiveQueueOptions& opts = {},
                                     FiveQueueStats* stats = nullptr) {
  return five_queue_layout(st, st.base_triangle(), opts, stats);
}

/// Checks the multi-level invariants of a layout produced by the engine:
/// M.1 levels occupy disjoint increasing intervals, M.2 level edges use
/// queues {0,1}, M.3 binding edges use {2,3,4}, plus the cross-component
/// separation used in the nesting proof.  Violations come back as strings.
inline std::vector<std::string> verify_m_invariants(const SimpleGraph& g,
                                                    const LevelStructure& ls,
                                                    const QueueLayout& layout) {
  std::vector<std::string> out;
  const int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(layout.order.size()); ++i)
    pos[layout.order[i]] = i;
  for (Vertex v = 0; v < n; ++v)
    if (pos[v] < 0) {
      out.push_back("vertex missing from order");
      return out;
    }
  // M.1
  for (int i = 0; i + 1 < n; ++i)
    if (ls.level_of[layout.order[i]] > ls.level_of[layout.order[i + 1]])
      out.push_back("M.1: levels not in interval order at position " +
                    std::to_string(i));
  for (const auto& iv : layout.intervals)
    for (int p = iv.begin; p < iv.end; ++p)
      if (ls.level_of[layout.order[p]] != iv.level)
        out.push_back("M.1: interval record disagrees with levels");
  // M.2 / M.3
  for (const auto& [e, q] : layout.queue_of) {
    int lu = ls.level_of[e.u], lv = ls.level_of[e.v];
    if (lu == lv) {
      if (q != 0 && q != 1)
        out.push_back("M.2: level edge in queue " + std::to_string(q));
    } else {
      if (std::abs(lu - lv) != 1)
        out.push_back("edge endpoints in non-adjacent intervals");
      if (q != kQueueAnchor && q != kQueueTop && q != kQueueBottom)
        out.push_back("M.3: binding edge in queue " + std::to_string(q));
    }
  }
  // Cross-component separation: per sibling pair and per level, one side's
  // vertices all precede the other's.
  for (const auto& node : ls.nodes) {
    const auto& kids = node.children;
    for (std::size_t a = 0; a < kids.size(); ++a)
      for (std::size_t b = a + 1; b < kids.size(); ++b) {
        // gather per-level position ranges of both subtrees
        auto ranges = [&](int root_id) {
          std::map<int, std::pair<int, int>> r;
          std::vector<int> stack = {root_id};
          while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            for (Vertex v : ls.nodes[id].comp.vertices) {
              auto [it, fresh] = r.try_emplace(ls.nodes[id].comp.level,
                                               std::make_pair(pos[v], pos[v]));
              if (!fresh) {
                it->second.first = std::min(it->second.first, pos[v]);
                it->second.second = std::max(it->second.second, pos[v]);
              }
            }
            for (int c : ls.nodes[id].children) stack.push_back(c);
          }
          return r;
        };
        auto ra = ranges(kids[a]);
        auto rb = ranges(kids[b]);
        int dir = 0;  // -1: a before b, +1: b before a
        for (const auto& [lvl, pa] : ra) {
          auto it = rb.find(lvl);
          if (it == rb.end()) continue;
          const auto& pb = it->second;
          int d;
          if (pa.second < pb.first) d = -1;
          else if (pb.second < pa.first) d = +1;
          else {
            out.push_back("separation: sibling components interleave at level " +
                          std::to_string(lvl));
            continue;
          }
          if (dir == 0) dir = d;
          else if (dir != d)
            out.push_back("separation: sibling order flips between levels");
        }
      }
  }
  return out;
}

}  // namespace q3t
