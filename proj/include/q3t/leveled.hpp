#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "q3t/core.hpp"
#include "q3t/levels.hpp"

namespace q3t {

struct FaceRoles {
  Vertex anchor;
  Vertex top;
  Vertex bottom;
};

/// Integer y-levels plus a left-to-right order within each level; realizes
/// the leveled outerplanar drawing interface (edge spans in {1,2}).
struct LeveledLayout {
  std::unordered_map<Vertex, int> y;
  std::map<int, std::vector<Vertex>> x_order;        // level -> sequence
  std::map<std::array<Vertex, 3>, FaceRoles> roles;  // sorted triple

  int level_of(Vertex v) const {
    auto it = y.find(v);
    if (it == y.end()) throw UnknownVertex("vertex missing from leveled layout");
    return it->second;
  }
};

struct LeveledLayoutStats {
  long long placements = 0;
  long long backtracks = 0;
  int restarts = 0;  // strategy restarts beyond the first greedy attempt
  bool fallback_used() const { return backtracks > 0 || restarts > 0; }
};

struct LeveledViolation {
  std::string kind;  // EdgeSpanViolation, FaceBandViolation, ...
  std::string detail;
};

namespace detail {

inline FaceRoles roles_from_y(const std::array<Vertex, 3>& f,
                              const std::unordered_map<Vertex, int>& y) {
  std::array<std::pair<int, Vertex>, 3> by_y = {
      std::make_pair(y.at(f[0]), f[0]), std::make_pair(y.at(f[1]), f[1]),
      std::make_pair(y.at(f[2]), f[2])};
  std::sort(by_y.begin(), by_y.end());
  if (by_y[0].first + 1 != by_y[1].first || by_y[1].first + 1 != by_y[2].first)
    throw InternalError("face does not occupy three consecutive levels");
  return {by_y[1].second, by_y[2].second, by_y[0].second};
}

/// Exact constructor for the leveled layout of a maximal outerplanar
/// component.  The search runs over the weak dual tree: every non-root face
/// contributes one fresh vertex whose level has up to two legal values and
/// whose x position is inserted into a global left-to-right list.  Validity
/// (edge spans, face bands, anchor monotonicity and per-queue non-nesting of
/// the derived 2-queue layout) is enforced incrementally; dead ends trigger
/// conflict-directed backjumping.  Escalating restarts vary the root face,
/// the root orientation and the option order; the final phase branches over
/// every insertion gap, which makes the search complete.
class LeveledSearch {
 public:
  LeveledSearch(const OuterplaneComponent& c, LeveledLayoutStats& stats)
      : comp_(c), stats_(stats) {
    const auto& faces = c.internal_faces;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
      const auto& t = faces[i];
      by_edge_[Edge(t[0], t[1])].push_back(i);
      by_edge_[Edge(t[0], t[2])].push_back(i);
      by_edge_[Edge(t[1], t[2])].push_back(i);
    }
  }

  bool run(LeveledLayout& out) {
    const int f = static_cast<int>(comp_.internal_faces.size());
    int centroid = dual_centroid();
    std::vector<int> roots;
    roots.push_back(centroid);
    if (centroid != 0) roots.push_back(0);
    // phase 1: near-greedy passes over a few roots and all orientations
    long long budget1 = 64LL * comp_.vertices.size() + 256;
    for (int root : roots)
      for (int ori = 0; ori < 6; ++ori)
        if (attempt(root, ori, 0, budget1, true, out)) return true;
    // phase 2: randomized option order, growing budgets, rotating roots
    long long budget = 4 * budget1;
    for (int round = 1; round <= 12; ++round) {
      int root = round <= 4 ? centroid : (round * 7919) % f;
      for (int ori = 0; ori < 6; ++ori)
        if (attempt(root, ori, round, budget, false, out)) return true;
      budget *= 2;
    }
    // phase 3: unbounded conflict-directed search with side candidates
    for (int ori = 0; ori < 6; ++ori)
      if (attempt(centroid, ori, 0, -1, false, out)) return true;
    // phase 4: complete search branching over every insertion gap
    for (int ori = 0; ori < 6; ++ori)
      if (attempt(centroid, ori, 0, -1, true, out)) return true;
    return false;
  }

 private:
  struct Step {
    std::array<Vertex, 3> face;
    Edge shared;
    Vertex fresh;
    Vertex parent_apex;
  };

  struct PlacedEdge {
    Edge e;
    int step;  // step that completed the edge; -1 for root edges
  };

  struct PlacedFace {
    std::array<Vertex, 3> tri;
    FaceRoles roles;
    int step;
  };

  int dual_centroid() const {
    const auto& faces = comp_.internal_faces;
    const int f = static_cast<int>(faces.size());
    if (f <= 2) return 0;
    std::vector<std::vector<int>> adj(f);
    for (const auto& [e, fs] : by_edge_)
      if (fs.size() == 2) {
        adj[fs[0]].push_back(fs[1]);
        adj[fs[1]].push_back(fs[0]);
      }
    std::vector<int> deg(f), sub(f, 1), order;
    for (int i = 0; i < f; ++i) deg[i] = static_cast<int>(adj[i].size());
    std::vector<int> queue;
    for (int i = 0; i < f; ++i)
      if (deg[i] <= 1) queue.push_back(i);
    std::vector<bool> done(f, false);
    int last = 0;
    while (!queue.empty()) {
      std::vector<int> next;
      for (int v : queue) {
        done[v] = true;
        last = v;
        for (int w : adj[v])
          if (!done[w] && --deg[w] == 1) next.push_back(w);
      }
      queue = std::move(next);
    }
    return last;
  }

  void build_steps(int root) {
    steps_.clear();
    const auto& faces = comp_.internal_faces;
    struct Pending {
      int face;
      Edge shared;
      Vertex parent_apex;
    };
    std::vector<bool> seen(faces.size(), false);
    std::vector<Pending> dfs = {{root, Edge(0, 1), -1}};
    seen[root] = true;
    while (!dfs.empty()) {
      Pending p = dfs.back();
      dfs.pop_back();
      if (p.face != root) {
        Vertex fresh = -1;
        for (Vertex v : faces[p.face])
          if (v != p.shared.u && v != p.shared.v) fresh = v;
        steps_.push_back({faces[p.face], p.shared, fresh, p.parent_apex});
      }
      std::vector<std::pair<std::array<Vertex, 3>, std::pair<int, Edge>>> kids;
      for (const Edge& e : {Edge(faces[p.face][0], faces[p.face][1]),
                            Edge(faces[p.face][0], faces[p.face][2]),
                            Edge(faces[p.face][1], faces[p.face][2])}) {
        for (int g : by_edge_.at(e))
          if (!seen[g]) kids.push_back({faces[g], {g, e}});
      }
      std::sort(kids.begin(), kids.end());
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        int g = it->second.first;
        Edge shared = it->second.second;
        seen[g] = true;
        Vertex papex = -1;
        for (Vertex v : faces[p.face])
          if (v != shared.u && v != shared.v) papex = v;
        dfs.push_back({g, shared, papex});
      }
    }
  }

  // ---- state during one attempt ----

  void reset_state() {
    y_.clear();
    X_.clear();
    pos_.clear();
    placed_faces_.clear();
    q_edges_[0].clear();
    q_edges_[1].clear();
    placed_by_.clear();
  }

  void rebuild_pos() {
    pos_.clear();
    for (int i = 0; i < static_cast<int>(X_.size()); ++i) pos_[X_[i]] = i;
  }

  bool precedes(Vertex a, Vertex b) const {
    int ya = y_.at(a), yb = y_.at(b);
    if (ya != yb) return ya > yb;
    return pos_.at(a) < pos_.at(b);
  }

  int step_of(Vertex v) const {
    auto it = placed_by_.find(v);
    return it == placed_by_.end() ? -1 : it->second;
  }

  // checks edge e against placed same-queue edges; on conflict records the
  // blocking step into `conflict`
  bool edge_ok(const Edge& e, std::vector<int>& conflict) const {
    int span = std::abs(y_.at(e.u) - y_.at(e.v));
    Vertex s1 = e.u, t1 = e.v;
    if (!precedes(s1, t1)) std::swap(s1, t1);
    bool ok = true;
    for (const PlacedEdge& pf : q_edges_[span - 1]) {
      const Edge& f = pf.e;
      if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) continue;
      Vertex s2 = f.u, t2 = f.v;
      if (!precedes(s2, t2)) std::swap(s2, t2);
      if ((precedes(s1, s2) && precedes(t2, t1)) ||
          (precedes(s2, s1) && precedes(t1, t2))) {
        conflict.push_back(pf.step);
        conflict.push_back(step_of(f.u));
        conflict.push_back(step_of(f.v));
        ok = false;
      }
    }
    return ok;
  }

  bool monotone_ok(const FaceRoles& r, std::vector<int>& conflict) const {
    bool ok = true;
    for (const auto& pf : placed_faces_) {
      const FaceRoles& o = pf.roles;
      if (o.anchor == r.anchor) continue;
      const FaceRoles& lo = precedes(o.anchor, r.anchor) ? o : r;
      const FaceRoles& hi = precedes(o.anchor, r.anchor) ? r : o;
      bool bad = (lo.top != hi.top && !precedes(lo.top, hi.top)) ||
                 (lo.bottom != hi.bottom && !precedes(lo.bottom, hi.bottom));
      if (bad) {
        conflict.push_back(pf.step);
        ok = false;
      }
    }
    return ok;
  }

  struct Option {
    int level;
    int at;  // insertion index into X_
  };

  /// Gap window [lo, hi] (insertion indices into X_) in which the fresh
  /// vertex of edge (w, p) at level `ly` avoids every two-row crossing on its
  /// band, derived from the non-crossing sign conditions; blockers that close
  /// the window are recorded for backjumping.
  void tighten_window(Vertex p, int ly, int& lo, int& hi,
                      std::vector<int>& blockers) const {
    int span = std::abs(ly - y_.at(p));
    bool w_is_top = ly > y_.at(p);
    int xp = pos_.at(p);
    for (const PlacedEdge& pf : q_edges_[span - 1]) {
      const Edge& f = pf.e;
      if (f.u == p || f.v == p) continue;
      int yu = y_.at(f.u), yv = y_.at(f.v);
      Vertex ft = yu > yv ? f.u : f.v;
      Vertex fb = yu > yv ? f.v : f.u;
      int fy_top = std::max(yu, yv);
      // same band test
      if (w_is_top) {
        if (fy_top != ly) continue;
        // w top against ft, p bottom against fb
        if (xp > pos_.at(fb)) {
          if (pos_.at(ft) + 1 > lo) {
            lo = pos_.at(ft) + 1;
            blockers.push_back(pf.step);
          }
        } else {
          if (pos_.at(ft) < hi) {
            hi = pos_.at(ft);
            blockers.push_back(pf.step);
          }
        }
      } else {
        if (fy_top != y_.at(p)) continue;
        // p top against ft, w bottom against fb
        if (xp > pos_.at(ft)) {
          if (pos_.at(fb) + 1 > lo) {
            lo = pos_.at(fb) + 1;
            blockers.push_back(pf.step);
          }
        } else {
          if (pos_.at(fb) < hi) {
            hi = pos_.at(fb);
            blockers.push_back(pf.step);
          }
        }
      }
    }
  }

  std::vector<Option> options_for(const Step& st, bool all_gaps,
                                  std::mt19937_64* shuffle_rng,
                                  std::vector<int>& window_blockers) const {
    Vertex a = st.shared.u, b = st.shared.v;
    int ya = y_.at(a), yb = y_.at(b);
    int lo = std::min(ya, yb), hi = std::max(ya, yb);
    std::vector<int> levels;
    if (hi - lo == 2) {
      levels = {lo + 1};
    } else {
      int papex_y = y_.at(st.parent_apex);
      int up = hi + 1, down = lo - 1;
      if (papex_y == up) levels = {down, up};
      else levels = {up, down};
    }
    std::vector<Option> opts;
    for (int ly : levels) {
      int glo = 0, ghi = static_cast<int>(X_.size());
      tighten_window(a, ly, glo, ghi, window_blockers);
      tighten_window(b, ly, glo, ghi, window_blockers);
      if (glo > ghi) continue;  // window closed on this level
      if (all_gaps) {
        for (int g = glo; g <= ghi; ++g) opts.push_back({ly, g});
      } else {
        // prefer the gap next to the shared edge, then the window extremes
        int target = std::max(pos_.at(a), pos_.at(b)) + 1;
        int near = std::clamp(target, glo, ghi);
        opts.push_back({ly, near});
        if (glo != near) opts.push_back({ly, glo});
        if (ghi != near && ghi != glo) opts.push_back({ly, ghi});
      }
    }
    if (shuffle_rng) {
      for (std::size_t i = opts.size(); i > 1; --i)
        std::swap(opts[i - 1], opts[(*shuffle_rng)() % i]);
    }
    return opts;
  }

  void place(const Step& st, const Option& o, int step_idx) {
    Vertex w = st.fresh;
    y_[w] = o.level;
    X_.insert(X_.begin() + o.at, w);
    rebuild_pos();
    placed_by_[w] = step_idx;
    FaceRoles r = roles_from_y(st.face, y_);
    placed_faces_.push_back({st.face, r, step_idx});
    for (const Edge& e : {Edge(w, st.shared.u), Edge(w, st.shared.v)}) {
      int span = std::abs(y_.at(e.u) - y_.at(e.v));
      q_edges_[span - 1].push_back({e, step_idx});
    }
  }

  void unplace(const Step& st) {
    Vertex w = st.fresh;
    placed_faces_.pop_back();
    for (int q = 0; q < 2; ++q)
      while (!q_edges_[q].empty() &&
             (q_edges_[q].back().e.u == w || q_edges_[q].back().e.v == w))
        q_edges_[q].pop_back();
    X_.erase(std::find(X_.begin(), X_.end(), w));
    y_.erase(w);
    placed_by_.erase(w);
    rebuild_pos();
  }

  bool check_placement(const Step& st, std::vector<int>& conflict) const {
    bool ok = true;
    if (!monotone_ok(placed_faces_.back().roles, conflict)) ok = false;
    Vertex w = st.fresh;
    if (!edge_ok(Edge(w, st.shared.u), conflict)) ok = false;
    if (!edge_ok(Edge(w, st.shared.v), conflict)) ok = false;
    return ok;
  }

  bool attempt(int root, int orientation, int shuffle_seed, long long budget,
               bool all_gaps, LeveledLayout& out) {
    if (stats_.placements > 0) ++stats_.restarts;
    build_steps(root);
    reset_state();

    std::array<int, 3> vals = {0, 1, 2};
    for (int i = 0; i < orientation; ++i) std::next_permutation(vals.begin(), vals.end());
    const auto& base = comp_.internal_faces[root];
    for (int i = 0; i < 3; ++i) y_[base[i]] = vals[i];
    X_ = {base[0], base[1], base[2]};
    rebuild_pos();
    placed_faces_.push_back({base, roles_from_y(base, y_), -1});
    q_edges_[std::abs(vals[0] - vals[1]) - 1].push_back({Edge(base[0], base[1]), -1});
    q_edges_[std::abs(vals[0] - vals[2]) - 1].push_back({Edge(base[0], base[2]), -1});
    q_edges_[std::abs(vals[1] - vals[2]) - 1].push_back({Edge(base[1], base[2]), -1});

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + shuffle_seed * 1000003ULL +
                        orientation);
    std::mt19937_64* rng_ptr = shuffle_seed > 0 ? &rng : nullptr;

    const int nsteps = static_cast<int>(steps_.size());
    struct Frame {
      std::vector<Option> opts;
      std::size_t next = 0;
      std::vector<int> conflicts;  // step indices blamed for failures
      bool placed = false;
    };
    std::vector<Frame> frames(nsteps);
    long long used = 0;
    int idx = 0;
    if (nsteps == 0) {
      finalize(out);
      return true;
    }
    frames[0].opts = options_for(steps_[0], all_gaps, rng_ptr);
    while (true) {
      if (idx == nsteps) {
        finalize(out);
        return true;
      }
      Frame& fr = frames[idx];
      bool advanced = false;
      while (fr.next < fr.opts.size()) {
        if (budget >= 0 && used >= budget) return false;
        ++used;
        ++stats_.placements;
        const Option& o = fr.opts[fr.next++];
        place(steps_[idx], o, idx);
        std::vector<int> conflict;
        if (check_placement(steps_[idx], conflict)) {
          fr.placed = true;
          ++idx;
          if (idx < nsteps) {
            frames[idx] = Frame{};
            frames[idx].opts = options_for(steps_[idx], all_gaps, rng_ptr);
          }
          advanced = true;
          break;
        }
        for (int s : conflict)
          if (s >= 0 && s < idx) fr.conflicts.push_back(s);
        unplace(steps_[idx]);
        ++stats_.backtracks;
      }
      if (advanced) continue;
      // all options failed: backjump to the latest conflicting step
      // (structural dependencies always include the parent placements)
      for (Vertex v : {steps_[idx].shared.u, steps_[idx].shared.v,
                       steps_[idx].parent_apex}) {
        int s = step_of(v);
        if (s >= 0) fr.conflicts.push_back(s);
      }
      int target = -1;
      for (int s : fr.conflicts)
        if (s < idx) target = std::max(target, s);
      if (target < 0) return false;
      // merge blame upward and rewind
      for (int s : fr.conflicts)
        if (s < target) frames[target].conflicts.push_back(s);
      for (int k = idx - 1; k >= target; --k)
        if (frames[k].placed) {
          unplace(steps_[k]);
          frames[k].placed = false;
        }
      for (int k = target + 1; k <= idx && k < nsteps; ++k) frames[k] = Frame{};
      idx = target;
      ++stats_.backtracks;
    }
  }

  void finalize(LeveledLayout& out) const {
    out = LeveledLayout{};
    int min_y = 0;
    for (const auto& [v, yy] : y_) {
      (void)v;
      min_y = std::min(min_y, yy);
    }
    for (const auto& [v, yy] : y_) out.y[v] = yy - min_y;
    for (Vertex v : X_) out.x_order[out.y.at(v)].push_back(v);
    for (const auto& pf : placed_faces_) {
      auto key = pf.tri;
      std::sort(key.begin(), key.end());
      out.roles[key] = pf.roles;
    }
  }

  const OuterplaneComponent& comp_;
  LeveledLayoutStats& stats_;
  std::map<Edge, std::vector<int>> by_edge_;
  std::vector<Step> steps_;

  std::unordered_map<Vertex, int> y_;
  std::vector<Vertex> X_;
  std::unordered_map<Vertex, int> pos_;
  std::vector<PlacedFace> placed_faces_;
  std::vector<PlacedEdge> q_edges_[2];
  std::unordered_map<Vertex, int> placed_by_;
};

}  // namespace detail

/// Leveled layout of a biconnected internally-triangulated outerplane
/// component (or a degenerate one with at most two vertices).
inline LeveledLayout leveled_layout(const OuterplaneComponent& c,
                                    LeveledLayoutStats* stats_out = nullptr) {
  LeveledLayoutStats stats;
  LeveledLayout out;
  const std::size_t n = c.vertices.size();
  if (n == 0) throw InternalStructureViolation("empty component");
  if (n == 1) {
    out.y[c.vertices[0]] = 0;
    out.x_order[0] = {c.vertices[0]};
  } else if (n == 2) {
    if (c.edges.size() != 1)
      throw InternalStructureViolation("two-vertex component without its edge");
    out.y[c.vertices[0]] = 1;
    out.y[c.vertices[1]] = 0;
    out.x_order[1] = {c.vertices[0]};
    out.x_order[0] = {c.vertices[1]};
  } else {
    auto viol = validate_outerplane_component(c, true);
    if (!viol.empty())
      throw InternalStructureViolation("leveled_layout precondition: " +
                                       viol.front());
    if (n == 3) {
      auto t = c.vertices;  // sorted
      out.y[t[0]] = 2;
      out.y[t[1]] = 1;
      out.y[t[2]] = 0;
      out.x_order[2] = {t[0]};
      out.x_order[1] = {t[1]};
      out.x_order[0] = {t[2]};
      out.roles[{t[0], t[1], t[2]}] = {t[1], t[0], t[2]};
    } else {
      detail::LeveledSearch search(c, stats);
      if (!search.run(out))
        throw ConstructionExhausted(
            "search could not realize a leveled layout");
    }
  }
  if (stats_out) *stats_out = stats;
  return out;
}

/// Unique role assignment of an internal face: anchor in the middle level,
/// top above, bottom below.
inline FaceRoles face_roles(const LeveledLayout& l, std::array<Vertex, 3> f) {
  std::sort(f.begin(), f.end());
  auto it = l.roles.find(f);
  if (it == l.roles.end()) throw NotAFace("triple is not an internal face");
  return it->second;
}

struct TwoQueueOrder {
  std::vector<Vertex> order;
  std::map<Edge, int> queue_of;  // 0 = span one, 1 = span two
};

/// Conversion of a leveled layout to a 2-queue layout: order by strictly
/// decreasing y, ties left-to-right; span-1 edges to queue 0, span-2 edges
/// to queue 1.
inline TwoQueueOrder two_queue_order(const OuterplaneComponent& c,
                                     const LeveledLayout& l) {
  TwoQueueOrder out;
  for (auto it = l.x_order.rbegin(); it != l.x_order.rend(); ++it)
    for (Vertex v : it->second) out.order.push_back(v);
  for (const Edge& e : c.edges) {
    int span = std::abs(l.level_of(e.u) - l.level_of(e.v));
    if (span < 1 || span > 2)
      throw InternalError("leveled layout contains an edge with invalid span");
    out.queue_of[e] = span - 1;
  }
  return out;
}

/// Validates all leveled-layout invariants; violations are returned as data.
inline std::vector<LeveledViolation> validate_leveled_layout(
    const OuterplaneComponent& c, const LeveledLayout& l) {
  std::vector<LeveledViolation> out;
  // structure: every vertex has a level and one slot in its level's sequence
  for (Vertex v : c.vertices) {
    auto it = l.y.find(v);
    if (it == l.y.end()) {
      out.push_back({"StructureViolation",
                     "vertex " + std::to_string(v) + " has no level"});
      continue;
    }
    auto xo = l.x_order.find(it->second);
    if (xo == l.x_order.end() ||
        std::count(xo->second.begin(), xo->second.end(), v) != 1)
      out.push_back({"StructureViolation",
                     "vertex " + std::to_string(v) +
                         " not exactly once in its level sequence"});
  }
  std::size_t listed = 0;
  for (const auto& [lvl, seq] : l.x_order) {
    listed += seq.size();
    for (Vertex v : seq) {
      auto it = l.y.find(v);
      if (it == l.y.end() || it->second != lvl)
        out.push_back({"StructureViolation",
                       "level sequence lists vertex with other level"});
    }
  }
  if (listed != c.vertices.size())
    out.push_back({"StructureViolation", "level sequences do not partition V"});
  if (!out.empty()) return out;  // downstream checks need sane structure

  for (const Edge& e : c.edges) {
    int span = std::abs(l.y.at(e.u) - l.y.at(e.v));
    if (span != 1 && span != 2)
      out.push_back({"EdgeSpanViolation",
                     "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has span " + std::to_string(span)});
  }
  // positions under the derived order
  std::unordered_map<Vertex, int> position;
  {
    int p = 0;
    for (auto it = l.x_order.rbegin(); it != l.x_order.rend(); ++it)
      for (Vertex v : it->second) position[v] = p++;
  }
  auto pre = [&](Vertex a, Vertex b) { return position.at(a) < position.at(b); };

  std::vector<std::pair<std::array<Vertex, 3>, FaceRoles>> face_roles_list;
  for (const auto& f : c.internal_faces) {
    std::array<int, 3> ys = {l.y.at(f[0]), l.y.at(f[1]), l.y.at(f[2])};
    std::sort(ys.begin(), ys.end());
    if (ys[0] + 1 != ys[1] || ys[1] + 1 != ys[2]) {
      out.push_back({"FaceBandViolation",
                     "face does not span three consecutive levels"});
      continue;
    }
    FaceRoles r = detail::roles_from_y(f, l.y);
    auto rit = l.roles.find(f);
    if (rit != l.roles.end()) {
      if (rit->second.anchor != r.anchor || rit->second.top != r.top ||
          rit->second.bottom != r.bottom)
        out.push_back({"StructureViolation", "stored face roles disagree with y"});
    }
    face_roles_list.push_back({f, r});
  }
  for (std::size_t i = 0; i < face_roles_list.size(); ++i)
    for (std::size_t j = i + 1; j < face_roles_list.size(); ++j) {
      const FaceRoles& fa = face_roles_list[i].second;
      const FaceRoles& fb = face_roles_list[j].second;
      if (fa.anchor == fb.anchor) continue;
      const FaceRoles& lo = pre(fa.anchor, fb.anchor) ? fa : fb;
      const FaceRoles& hi = pre(fa.anchor, fb.anchor) ? fb : fa;
      if (lo.top != hi.top && !pre(lo.top, hi.top))
        out.push_back({"AnchorMonotonicityViolation",
                       "tops ordered against their anchors"});
      if (lo.bottom != hi.bottom && !pre(lo.bottom, hi.bottom))
        out.push_back({"AnchorMonotonicityViolation",
                       "bottoms ordered against their anchors"});
    }
  // derived 2-queue non-nesting
  for (int q = 0; q < 2; ++q) {
    std::vector<Edge> qe;
    for (const Edge& e : c.edges)
      if (std::abs(l.y.at(e.u) - l.y.at(e.v)) == q + 1) qe.push_back(e);
    for (std::size_t i = 0; i < qe.size(); ++i)
      for (std::size_t j = i + 1; j < qe.size(); ++j) {
        const Edge& e = qe[i];
        const Edge& f = qe[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        int s1 = std::min(position.at(e.u), position.at(e.v));
        int t1 = std::max(position.at(e.u), position.at(e.v));
        int s2 = std::min(position.at(f.u), position.at(f.v));
        int t2 = std::max(position.at(f.u), position.at(f.v));
        if ((s1 < s2 && t2 < t1) || (s2 < s1 && t1 < t2))
          out.push_back({"QueueNestingViolation",
                         "two span-" + std::to_string(q + 1) +
                             " edges nest in the derived order"});
      }
  }
  return out;
}

}  // namespace q3t
