#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "q3t/core.hpp"
#include "q3t/graph.hpp"
#include "q3t/queue_layout.hpp"

namespace q3t {

/// Bijective vertex -> rank map.
struct LinearOrder {
  std::vector<int> position;  // indexed by vertex id

  static LinearOrder from_sequence(const std::vector<Vertex>& seq, int n) {
    if (static_cast<int>(seq.size()) != n)
      throw IncompleteAssignment("order does not cover all vertices");
    LinearOrder lo;
    lo.position.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      Vertex v = seq[i];
      if (v < 0 || v >= n) throw UnknownVertex("order contains unknown vertex id");
      if (lo.position[v] != -1) throw UnknownVertex("order repeats a vertex");
      lo.position[v] = i;
    }
    return lo;
  }

  std::vector<Vertex> to_sequence() const {
    std::vector<Vertex> seq(position.size());
    for (int v = 0; v < static_cast<int>(position.size()); ++v) seq[position[v]] = v;
    return seq;
  }

  int n() const { return static_cast<int>(position.size()); }
};

enum class PatternKind { Rainbow, Twist, Necklace };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Rainbow: return "rainbow";
    case PatternKind::Twist: return "twist";
    case PatternKind::Necklace: return "necklace";
  }
  return "?";
}

/// A k-rainbow / k-twist / k-necklace witness.  Edges are listed with
/// s_1 < s_2 < ... by position of the left endpoint.
struct PatternCertificate {
  PatternKind kind = PatternKind::Rainbow;
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Checks that a certificate's edges realize its claimed pattern under the
/// given positions (pairwise independent, and in rainbow/twist/necklace
/// position).  Certificates are self-validating via this function.
inline bool certificate_holds(const PatternCertificate& cert,
                              const std::vector<int>& position) {
  const auto& es = cert.edges;
  const int k = static_cast<int>(es.size());
  if (k == 0) return false;
  std::vector<std::pair<int, int>> iv;
  iv.reserve(k);
  for (const Edge& e : es) {
    int a = position[e.u], b = position[e.v];
    iv.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      // independence: all four endpoints distinct
      if (iv[i].first == iv[j].first || iv[i].first == iv[j].second ||
          iv[i].second == iv[j].first || iv[i].second == iv[j].second)
        return false;
    }
  for (int i = 0; i + 1 < k; ++i) {
    const auto& a = iv[i];
    const auto& b = iv[i + 1];
    switch (cert.kind) {
      case PatternKind::Rainbow:
        if (!(a.first < b.first && b.second < a.second)) return false;
        break;
      case PatternKind::Twist:
        if (!(a.first < b.first && a.second < b.second && b.first < a.second))
          return false;
        break;
      case PatternKind::Necklace:
        if (!(a.second < b.first)) return false;
        break;
    }
  }
  if (cert.kind == PatternKind::Twist) {
    // pairwise crossing needs every left endpoint before the first right one
    int min_r = iv[0].second;
    for (const auto& p : iv) min_r = std::min(min_r, p.second);
    for (const auto& p : iv)
      if (p.first > min_r) return false;
  }
  return true;
}

namespace detail {

/// Fenwick tree over positions supporting prefix maximum with argument.
class PrefixMax {
 public:
  explicit PrefixMax(int n) : vals_(n + 1, 0), args_(n + 1, -1) {}

  void update(int pos, int val, int arg) {
    for (int i = pos + 1; i < static_cast<int>(vals_.size()); i += i & -i) {
      if (val > vals_[i]) {
        vals_[i] = val;
        args_[i] = arg;
      }
    }
  }

  /// Max over positions [0, pos]; returns {value, argument}.
  std::pair<int, int> query(int pos) const {
    int best = 0, arg = -1;
    for (int i = pos + 1; i > 0; i -= i & -i) {
      if (vals_[i] > best) {
        best = vals_[i];
        arg = args_[i];
      }
    }
    return {best, arg};
  }

 private:
  std::vector<int> vals_;
  std::vector<int> args_;
};

struct NestingDepths {
  std::vector<int> depth;   // per edge index
  std::vector<int> inner;   // edge index of a deepest edge strictly inside, or -1
  int max_depth = 0;
  int max_edge = -1;  // edge index achieving max_depth
};

/// depth(e) = 1 + max depth over edges strictly nested inside e.
/// Intervals use strict nesting (shared endpoints never nest).
inline NestingDepths nesting_depths(const std::vector<std::pair<int, int>>& iv,
                                    int n_positions) {
  const int m = static_cast<int>(iv.size());
  NestingDepths out;
  out.depth.assign(m, 0);
  out.inner.assign(m, -1);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  // Process by left endpoint descending so that already-inserted edges have a
  // strictly larger left endpoint; equal-left groups are inserted only after
  // the whole group is queried.
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return iv[a].first > iv[b].first;
  });
  PrefixMax fen(n_positions);
  int i = 0;
  while (i < m) {
    int j = i;
    while (j < m && iv[idx[j]].first == iv[idx[i]].first) ++j;
    for (int k = i; k < j; ++k) {
      int e = idx[k];
      auto [best, arg] = fen.query(iv[e].second - 1);  // r' < r_e strictly
      out.depth[e] = best + 1;
      out.inner[e] = arg;
      if (out.depth[e] > out.max_depth) {
        out.max_depth = out.depth[e];
        out.max_edge = e;
      }
    }
    for (int k = i; k < j; ++k) {
      int e = idx[k];
      fen.update(iv[e].second, out.depth[e], e);
    }
    i = j;
  }
  return out;
}

inline std::vector<std::pair<int, int>> edge_intervals(
    const std::vector<Edge>& edges, const std::vector<int>& position) {
  std::vector<std::pair<int, int>> iv;
  iv.reserve(edges.size());
  for (const Edge& e : edges) {
    int a = position[e.u], b = position[e.v];
    iv.emplace_back(std::min(a, b), std::max(a, b));
  }
  return iv;
}

}  // namespace detail

struct RainbowResult {
  int size = 0;
  PatternCertificate certificate;  // a maximum rainbow (outermost edge first)
};

/// Maximum number of pairwise-nested independent edges under the given order,
/// with a witnessing rainbow.
inline RainbowResult max_rainbow(const SimpleGraph& g, const LinearOrder& order) {
  RainbowResult res;
  const auto& edges = g.edges();
  if (edges.empty()) return res;
  auto iv = detail::edge_intervals(edges, order.position);
  auto nd = detail::nesting_depths(iv, order.n());
  res.size = nd.max_depth;
  res.certificate.kind = PatternKind::Rainbow;
  for (int e = nd.max_edge; e != -1; e = nd.inner[e])
    res.certificate.edges.push_back(edges[e]);
  return res;
}

/// Lemma-1 constructive direction: queue(e) = nesting depth of e minus one.
/// Uses exactly max_rainbow(g, order) queues.
inline QueueLayout assign_min_queues(const SimpleGraph& g, const LinearOrder& order) {
  QueueLayout layout;
  layout.order = order.to_sequence();
  const auto& edges = g.edges();
  auto iv = detail::edge_intervals(edges, order.position);
  auto nd = detail::nesting_depths(iv, order.n());
  for (std::size_t i = 0; i < edges.size(); ++i)
    layout.queue_of[edges[i]] = nd.depth[i] - 1;
  return layout;
}

struct LayoutViolation {
  std::string reason;
  PatternCertificate certificate;  // 2-rainbow witness when applicable
};

/// ok (nullopt) iff at most `max_queues` queues are used and within each queue
/// no two independent edges nest.  Nesting is strict: (a,b) nests (c,d) iff
/// a < c and d < b in positions.
inline std::optional<LayoutViolation> is_valid_queue_layout(
    const SimpleGraph& g, const QueueLayout& layout, int max_queues) {
  LinearOrder order = LinearOrder::from_sequence(layout.order, g.vertex_count());
  for (const auto& [e, q] : layout.queue_of) {
    if (e.u < 0 || e.v >= g.vertex_count())
      throw UnknownVertex("assigned edge has unknown endpoint");
    if (!g.has_edge(e.u, e.v))
      throw IncompleteAssignment("assignment mentions an edge not in the graph");
    if (q < 0) throw IncompleteAssignment("negative queue index");
  }
  for (const Edge& e : g.edges())
    if (!layout.queue_of.count(e))
      throw IncompleteAssignment("edge missing from queue assignment");

  int used = layout.distinct_queues_used();
  if (used > max_queues) {
    return LayoutViolation{
        "uses " + std::to_string(used) + " queues, allowed " +
            std::to_string(max_queues),
        {}};
  }

  // Group edges per queue and look for a nested pair within each queue.
  std::vector<std::vector<Edge>> per_queue;
  for (const auto& [e, q] : layout.queue_of) {
    if (q >= static_cast<int>(per_queue.size())) per_queue.resize(q + 1);
    per_queue[q].push_back(e);
  }
  for (std::size_t q = 0; q < per_queue.size(); ++q) {
    auto& qe = per_queue[q];
    auto iv = detail::edge_intervals(qe, order.position);
    std::vector<int> idx(qe.size());
    for (std::size_t i = 0; i < qe.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return iv[a].first < iv[b].first;
    });
    // Sweep by left endpoint; an earlier edge with strictly smaller left and
    // strictly larger right endpoint nests the current one.
    int best_r = -1, best_e = -1;
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j < idx.size() && iv[idx[j]].first == iv[idx[i]].first) ++j;
      for (std::size_t k = i; k < j; ++k) {
        int e = idx[k];
        if (best_r > iv[e].second) {
          PatternCertificate cert;
          cert.kind = PatternKind::Rainbow;
          cert.edges = {qe[best_e], qe[e]};
          return LayoutViolation{
              "queue " + std::to_string(q) + " contains a nested pair", cert};
        }
      }
      for (std::size_t k = i; k < j; ++k) {
        int e = idx[k];
        if (iv[e].second > best_r) {
          best_r = iv[e].second;
          best_e = e;
        }
      }
      i = j;
    }
  }
  return std::nullopt;
}

/// Lemma-5 extraction: among pairwise independent, pairwise non-nesting edges
/// of one queue, find an r-twist if one exists, else build the r-necklace by
/// the greedy skip-(r-1) procedure.
inline PatternCertificate find_twist_or_necklace(const std::vector<Edge>& edges,
                                                 const LinearOrder& order,
                                                 int r) {
  if (r < 1) throw UsageError("r must be positive");
  auto iv = detail::edge_intervals(edges, order.position);
  const int m = static_cast<int>(iv.size());
  // Precondition: pairwise independent and non-nesting.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = iv[i];
      const auto& b = iv[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second)
        throw PreconditionViolated("edges are not pairwise independent");
      if ((a.first < b.first && b.second < a.second) ||
          (b.first < a.first && a.second < b.second))
        throw PreconditionViolated("edges contain a nesting pair");
    }
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return iv[a].first < iv[b].first; });

  PatternCertificate cert;
  if (r == 1) {
    if (m == 0) throw PreconditionViolated("no edges given");
    cert.kind = PatternKind::Necklace;
    cert.edges = {edges[idx[0]]};
    return cert;
  }
  // A window of r consecutive edges (by left endpoint) whose left endpoints
  // all precede the first edge's right endpoint is pairwise crossing.  Any
  // r-twist among non-nesting edges yields such a window, so this scan is
  // complete.
  for (int f = 0; f + r <= m; ++f) {
    if (iv[idx[f + r - 1]].first < iv[idx[f]].second) {
      cert.kind = PatternKind::Twist;
      for (int k = f; k < f + r; ++k) cert.edges.push_back(edges[idx[k]]);
      return cert;
    }
  }
  // No r-twist: take the first edge, discard the next r-1, repeat.  The edge
  // r-1 steps ahead starts after the current right endpoint, so consecutive
  // picks are disjoint.
  if (m < (r - 1) * (r - 1) + 1)
    throw PreconditionViolated("not enough edges for necklace extraction");
  cert.kind = PatternKind::Necklace;
  int pos = 0;
  int prev_r = -1;
  for (int k = 0; k < r; ++k, pos += r - 1) {
    int e = idx[pos];
    if (iv[e].first <= prev_r)
      throw InternalError("necklace extraction produced a crossing pair");
    cert.edges.push_back(edges[e]);
    prev_r = iv[e].second;
  }
  return cert;
}

}  // namespace q3t
