#pragma once

#include <map>
#include <vector>

#include "q3t/core.hpp"

namespace q3t {

/// Interval of positions [begin, end) occupied by one peeling level in the
/// linear order.
struct LevelInterval {
  int level;
  int begin;
  int end;
};

/// A linear vertex order plus an edge -> queue assignment.
struct QueueLayout {
  std::vector<Vertex> order;
  std::map<Edge, int> queue_of;
  std::vector<LevelInterval> intervals;  // empty when not produced by peeling

  int queues_used() const {
    int q = 0;
    bool any = false;
    for (const auto& [e, i] : queue_of) {
      (void)e;
      q = std::max(q, i + 1);
      any = true;
    }
    return any ? q : 0;
  }

  int distinct_queues_used() const {
    std::vector<bool> seen;
    int count = 0;
    for (const auto& [e, i] : queue_of) {
      (void)e;
      if (i >= static_cast<int>(seen.size())) seen.resize(i + 1, false);
      if (!seen[i]) {
        seen[i] = true;
        ++count;
      }
    }
    return count;
  }
};

}  // namespace q3t
