#pragma once

#include <algorithm>
#include <vector>

#include "q3t/core.hpp"

namespace q3t {

/// Simple undirected graph on vertex ids 0..n-1.  Edge set is kept sorted;
/// adjacency lists are kept sorted as well.  No self-loops, no multi-edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(n) {
    if (n < 0) throw UsageError("vertex count must be non-negative");
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw UsageError("self-loop rejected");
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) throw UsageError("duplicate edge rejected");
    edges_.insert(it, e);
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count() || a == b)
      return false;
    Edge e(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Lexicographically sorted edge list with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const SimpleGraph& other) const {
    return adj_.size() == other.adj_.size() && edges_ == other.edges_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count()) throw UnknownVertex("vertex id out of range");
  }

  static void insert_sorted(std::vector<Vertex>& vec, Vertex v) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), v), v);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace q3t
