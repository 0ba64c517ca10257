#pragma once

// Test-side oracles, deliberately independent of the optimized enumeration
// path: plain recursion over VertexId sets, walks materialized one by one.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "sawlab/bigint.hpp"
#include "sawlab/graph.hpp"

namespace oracle {

using sawlab::BigInt;
using sawlab::RootedGraph;
using sawlab::VertexId;

struct NaiveWalk {
  std::vector<VertexId> path;
  BigInt weight = 1;
};

/// Every n-step SAW from the root, as explicit vertex sequences.
inline std::vector<NaiveWalk> naive_walks(const RootedGraph& g, int n) {
  std::vector<NaiveWalk> out;
  std::vector<VertexId> path{g.root};
  std::set<VertexId> used{g.root};
  BigInt weight = 1;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back({path, weight});
      return;
    }
    for (const auto& e : g.neighbors(path.back())) {
      if (used.count(e.to)) continue;
      used.insert(e.to);
      path.push_back(e.to);
      weight *= e.multiplicity;
      self(self, depth + 1);
      weight /= e.multiplicity;
      path.pop_back();
      used.erase(e.to);
    }
  };
  rec(rec, 0);
  return out;
}

inline BigInt naive_sigma(const RootedGraph& g, int n) {
  BigInt total = 0;
  for (const auto& w : naive_walks(g, n)) total += w.weight;
  return total;
}

inline std::vector<BigInt> naive_series(const RootedGraph& g, int n) {
  std::vector<BigInt> out;
  for (int k = 0; k <= n; ++k) out.push_back(naive_sigma(g, k));
  return out;
}

inline bool is_bridge(const RootedGraph& g, const std::vector<VertexId>& path) {
  const auto& h = g.height->eval;
  const std::int64_t h0 = h(path.front());
  const std::int64_t hn = h(path.back());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const std::int64_t hi = h(path[i]);
    if (!(h0 < hi && hi <= hn)) return false;
  }
  return true;
}

inline BigInt naive_bridges(const RootedGraph& g, int n) {
  if (n == 0) return 1;
  BigInt total = 0;
  for (const auto& w : naive_walks(g, n))
    if (is_bridge(g, w.path)) total += w.weight;
  return total;
}

inline bool naive_extends(const RootedGraph& g, std::set<VertexId>& used,
                          const VertexId& tip, int m) {
  if (m == 0) return true;
  for (const auto& e : g.neighbors(tip)) {
    if (used.count(e.to)) continue;
    used.insert(e.to);
    const bool ok = naive_extends(g, used, e.to, m - 1);
    used.erase(e.to);
    if (ok) return true;
  }
  return false;
}

inline BigInt naive_extendable(const RootedGraph& g, int n, int m) {
  BigInt total = 0;
  for (const auto& w : naive_walks(g, n)) {
    std::set<VertexId> used(w.path.begin(), w.path.end());
    if (naive_extends(g, used, w.path.back(), m)) total += w.weight;
  }
  return total;
}

/// Shortest simple cycle through the root with length <= limit, by brute
/// force: an n-step SAW from the root whose endpoint is adjacent to the root
/// closes an (n+1)-cycle.
inline int naive_root_cycle(const RootedGraph& g, int limit) {
  for (int n = 2; n < limit; ++n) {
    for (const auto& w : naive_walks(g, n)) {
      for (const auto& e : g.neighbors(w.path.back()))
        if (e.to == g.root) return n + 1;
    }
  }
  return -1;
}

/// Graph distance by BFS over the neighbor rule, capped at `limit`.
inline int naive_distance(const RootedGraph& g, const VertexId& a, const VertexId& b,
                          int limit) {
  if (a == b) return 0;
  std::map<VertexId, int> dist{{a, 0}};
  std::queue<VertexId> q;
  q.push(a);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    const int d = dist[v];
    if (d >= limit) continue;
    for (const auto& e : g.neighbors(v)) {
      if (dist.count(e.to)) continue;
      if (e.to == b) return d + 1;
      dist[e.to] = d + 1;
      q.push(e.to);
    }
  }
  return -1;
}

/// Rooted ball of radius r: dense ids in BFS order plus out-adjacency with
/// multiplicities, restricted to the ball.
struct Ball {
  std::vector<VertexId> ids;
  std::vector<int> layer;
  std::vector<std::map<int, int>> adj;  // index -> (index -> multiplicity)
};

inline Ball collect_ball(const RootedGraph& g, int r) {
  Ball b;
  std::map<VertexId, int> index;
  index[g.root] = 0;
  b.ids.push_back(g.root);
  b.layer.push_back(0);
  for (std::size_t i = 0; i < b.ids.size(); ++i) {
    if (b.layer[i] >= r) continue;
    for (const auto& e : g.neighbors(b.ids[i])) {
      if (!index.count(e.to)) {
        index[e.to] = static_cast<int>(b.ids.size());
        b.ids.push_back(e.to);
        b.layer.push_back(b.layer[i] + 1);
      }
    }
  }
  b.adj.resize(b.ids.size());
  for (std::size_t i = 0; i < b.ids.size(); ++i) {
    if (b.layer[i] >= r) continue;  // induced on expanded vertices
    for (const auto& e : g.neighbors(b.ids[i])) {
      auto it = index.find(e.to);
      if (it != index.end()) b.adj[i][it->second] += e.multiplicity;
    }
  }
  return b;
}

/// Backtracking root-preserving isomorphism test between radius-r balls,
/// comparing adjacency (with multiplicities) among vertices whose full
/// neighborhoods lie inside the ball.
inline bool ball_isomorphic(const RootedGraph& g1, const RootedGraph& g2, int r) {
  Ball a = collect_ball(g1, r), b = collect_ball(g2, r);
  if (a.ids.size() != b.ids.size()) return false;
  const int n = static_cast<int>(a.ids.size());
  for (int i = 0; i < n; ++i) {
    if (std::count(a.layer.begin(), a.layer.end(), a.layer[i]) !=
        std::count(b.layer.begin(), b.layer.end(), a.layer[i]))
      return false;
  }
  std::vector<int> map_ab(n, -1), map_ba(n, -1);
  auto consistent = [&](int va, int vb) {
    if (a.layer[va] != b.layer[vb]) return false;
    if (a.adj[va].size() != b.adj[vb].size()) return false;
    for (const auto& [w, m] : a.adj[va]) {
      if (map_ab[w] < 0) continue;
      auto it = b.adj[vb].find(map_ab[w]);
      if (it == b.adj[vb].end() || it->second != m) return false;
    }
    // reverse direction: mapped neighbors of vb must be neighbors of va
    for (const auto& [w, m] : b.adj[vb]) {
      if (map_ba[w] < 0) continue;
      auto it = a.adj[va].find(map_ba[w]);
      if (it == a.adj[va].end() || it->second != m) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int va) -> bool {
    if (va == n) return true;
    for (int vb = 0; vb < n; ++vb) {
      if (map_ba[vb] >= 0) continue;
      if (!consistent(va, vb)) continue;
      map_ab[va] = vb;
      map_ba[vb] = va;
      if (self(self, va + 1)) return true;
      map_ab[va] = -1;
      map_ba[vb] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
