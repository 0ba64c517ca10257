#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sawlab/vertex.hpp"

namespace sawlab {

using json = nlohmann::json;

enum class EdgeDir : std::uint8_t { undirected, out_only };

/// One entry of a neighbor list: target vertex, edge multiplicity, direction.
/// Parallel edges to the same target are aggregated into the multiplicity.
struct HalfEdge {
  VertexId to;
  std::uint32_t multiplicity = 1;
  EdgeDir dir = EdgeDir::undirected;
};

enum class TransitiveClass : std::uint8_t { transitive, quasi_transitive };

enum class HeightRigor : std::uint8_t { transitive_certified, heuristic };

/// Integer height on vertices with h(root) = 0, a strictly lower and a
/// strictly higher neighbor at every vertex, and |dh| <= d along edges.
struct HeightFunction {
  std::function<std::int64_t(const VertexId&)> eval;
  int d = 1;
  HeightRigor rigor = HeightRigor::heuristic;
};

/// A rooted, lazily defined, possibly infinite multigraph. The neighbor rule
/// must be a pure function emitting a deterministic, canonically ordered
/// list for each vertex. Instances are immutable after construction and safe
/// to share across threads.
class RootedGraph {
 public:
  VertexId root;
  std::function<std::vector<HalfEdge>(const VertexId&)> neighbor_rule;
  int degree = 0;                      // max total multiplicity at any vertex
  bool simple = true;                  // undirected, no parallel edges
  bool directed_edges = false;         // true when edges are out-only
  TransitiveClass transitive_class = TransitiveClass::transitive;
  std::optional<int> girth;
  std::optional<HeightFunction> height;
  json spec;                 // canonical {family, params...} object
  bool canonical_spec = true;  // false for user-supplied rules/colorings
  std::string family_name;   // convenience tag, e.g. "ladder"

  /// Byte-stable serialization used as cache key and CLI echo.
  std::string key() const { return spec.dump(); }

  std::vector<HalfEdge> neighbors(const VertexId& v) const { return neighbor_rule(v); }
};

inline std::int64_t height_of(const RootedGraph& g, const VertexId& v) {
  if (!g.height) throw std::invalid_argument("graph has no height function");
  return g.height->eval(v);
}

struct HeightViolation {
  VertexId v;
  std::string what;
};

struct HeightReport {
  std::vector<HeightViolation> violations;
  int observed_d = 0;
  std::size_t vertices_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Walks the ball of the given radius and checks h(root) = 0, the
/// lower/higher-neighbor condition, and the declared bound d on edge
/// height differences. Built-in height functions must come back clean.
inline HeightReport validate_height(const RootedGraph& g, int radius) {
  if (!g.height) throw std::invalid_argument("graph has no height function");
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  HeightReport rep;
  const auto& h = *g.height;
  std::map<VertexId, int> dist;
  std::queue<VertexId> q;
  dist[g.root] = 0;
  q.push(g.root);
  if (h.eval(g.root) != 0)
    rep.violations.push_back({g.root, "h(root) != 0"});
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    const int dv = dist[v];
    const std::int64_t hv = h.eval(v);
    bool has_lower = false, has_higher = false;
    for (const auto& e : g.neighbors(v)) {
      const std::int64_t hu = h.eval(e.to);
      const std::int64_t diff = hu > hv ? hu - hv : hv - hu;
      if (diff > h.d)
        rep.violations.push_back({v, "edge height change " + std::to_string(diff) +
                                         " exceeds declared d=" + std::to_string(h.d)});
      rep.observed_d = std::max<std::int64_t>(rep.observed_d, diff);
      has_lower |= hu < hv;
      has_higher |= hu > hv;
      if (dv < radius && !dist.count(e.to)) {
        dist[e.to] = dv + 1;
        q.push(e.to);
      }
    }
    if (!has_lower) rep.violations.push_back({v, "no neighbor with lower height"});
    if (!has_higher) rep.violations.push_back({v, "no neighbor with higher height"});
    ++rep.vertices_checked;
  }
  return rep;
}

}  // namespace sawlab
