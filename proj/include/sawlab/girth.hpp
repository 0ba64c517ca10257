#pragma once

#include <map>
#include <optional>
#include <queue>
#include <stdexcept>

#include "sawlab/graph.hpp"

namespace sawlab {

/// Length of the shortest cycle through the root if it is <= limit, else
/// nullopt. On a transitive simple graph this is the girth.
///
/// BFS from the root records each vertex's distance and the root-neighbor
/// branch it was first reached through. Any edge joining two different
/// branches closes a simple cycle through the root of length
/// dist(u) + dist(w) + 1, and the minimum over such edges is the shortest
/// cycle through the root.
inline std::optional<int> girth_up_to(const RootedGraph& g, int limit) {
  if (!g.simple) throw std::invalid_argument("girth_up_to requires a simple graph");
  if (limit < 3) throw std::invalid_argument("girth_up_to: limit must be >= 3");

  struct Info {
    int dist;
    int branch;
  };
  std::map<VertexId, Info> info;
  std::queue<VertexId> q;
  info[g.root] = {0, -1};
  q.push(g.root);
  int best = limit + 1;
  const int max_dist = limit / 2 + 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    const Info iv = info[v];
    if (iv.dist >= max_dist) continue;
    for (const auto& e : g.neighbors(v)) {
      auto it = info.find(e.to);
      if (it == info.end()) {
        const int branch = iv.branch < 0 ? static_cast<int>(info.size()) : iv.branch;
        info[e.to] = {iv.dist + 1, branch};
        q.push(e.to);
      } else if (iv.branch >= 0 && it->second.branch >= 0 &&
                 it->second.branch != iv.branch) {
        best = std::min(best, iv.dist + it->second.dist + 1);
      }
    }
  }
  if (best <= limit) return best;
  return std::nullopt;
}

}  // namespace sawlab
