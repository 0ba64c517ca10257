#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sawlab/graph.hpp"

namespace sawlab {

// ---------------------------------------------------------------------------
// The built-in family zoo. Every rule emits neighbors in a fixed canonical
// order and normalises ids on construction, so that ids emitted by
// neighbors() are always canonical.
// ---------------------------------------------------------------------------

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_key_size(const VertexId& v, std::size_t n, const char* family) {
  if (v.key.size() != n)
    throw std::invalid_argument(std::string("malformed VertexId for ") + family);
}

}  // namespace detail

/// Z^d with unit steps. Height: first coordinate, d = 1, certified.
inline RootedGraph make_hypercubic(int dim) {
  detail::require(dim >= 1, "hypercubic: dim must be >= 1");
  RootedGraph g;
  g.root = VertexId(std::vector<std::int32_t>(dim, 0));
  g.neighbor_rule = [dim](const VertexId& v) {
    detail::check_key_size(v, static_cast<std::size_t>(dim), "hypercubic");
    std::vector<HalfEdge> out;
    out.reserve(2 * dim);
    for (int i = 0; i < dim; ++i) {
      VertexId p = v, m = v;
      p.key[i] += 1;
      m.key[i] -= 1;
      out.push_back({p, 1, EdgeDir::undirected});
      out.push_back({m, 1, EdgeDir::undirected});
    }
    return out;
  };
  g.degree = 2 * dim;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  if (dim >= 2) g.girth = 4;
  g.height = HeightFunction{
      [](const VertexId& v) { return static_cast<std::int64_t>(v.key[0]); }, 1,
      HeightRigor::transitive_certified};
  g.spec = json{{"family", "hypercubic"}, {"dim", dim}};
  g.family_name = "hypercubic";
  return g;
}

/// Z x {0,1}: two rails plus a rung at every index. Height: rung index.
inline RootedGraph make_ladder() {
  RootedGraph g;
  g.root = VertexId{0, 0};
  g.neighbor_rule = [](const VertexId& v) {
    detail::check_key_size(v, 2, "ladder");
    const auto x = v.key[0], y = v.key[1];
    if (y != 0 && y != 1) throw std::invalid_argument("malformed VertexId for ladder");
    return std::vector<HalfEdge>{{VertexId{x + 1, y}, 1, EdgeDir::undirected},
                                 {VertexId{x - 1, y}, 1, EdgeDir::undirected},
                                 {VertexId{x, 1 - y}, 1, EdgeDir::undirected}};
  };
  g.degree = 3;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.girth = 4;
  g.height = HeightFunction{
      [](const VertexId& v) { return static_cast<std::int64_t>(v.key[0]); }, 1,
      HeightRigor::transitive_certified};
  g.spec = json{{"family", "ladder"}};
  g.family_name = "ladder";
  return g;
}

/// Hexagonal tiling in the brick-wall embedding: ids are Z^2 points, all
/// horizontal edges present, vertical edge upward iff x + y is even. Gives
/// an integer height (the horizontal coordinate) with d = 1.
inline RootedGraph make_hexagonal() {
  RootedGraph g;
  g.root = VertexId{0, 0};
  g.neighbor_rule = [](const VertexId& v) {
    detail::check_key_size(v, 2, "hexagonal");
    const auto x = v.key[0], y = v.key[1];
    const bool up = ((x + y) % 2 + 2) % 2 == 0;
    return std::vector<HalfEdge>{
        {VertexId{x + 1, y}, 1, EdgeDir::undirected},
        {VertexId{x - 1, y}, 1, EdgeDir::undirected},
        {VertexId{x, up ? y + 1 : y - 1}, 1, EdgeDir::undirected}};
  };
  g.degree = 3;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.girth = 6;
  // The brick-wall translation group acts with two orbits, so the height is
  // flagged heuristic even though the graph itself is vertex-transitive.
  g.height = HeightFunction{
      [](const VertexId& v) { return static_cast<std::int64_t>(v.key[0]); }, 1,
      HeightRigor::heuristic};
  g.spec = json{{"family", "hexagonal"}};
  g.family_name = "hexagonal";
  return g;
}

/// Z^2 plus the (1,1) diagonal through every vertex.
inline RootedGraph make_triangular() {
  RootedGraph g;
  g.root = VertexId{0, 0};
  g.neighbor_rule = [](const VertexId& v) {
    detail::check_key_size(v, 2, "triangular");
    const auto x = v.key[0], y = v.key[1];
    return std::vector<HalfEdge>{{VertexId{x + 1, y}, 1, EdgeDir::undirected},
                                 {VertexId{x - 1, y}, 1, EdgeDir::undirected},
                                 {VertexId{x, y + 1}, 1, EdgeDir::undirected},
                                 {VertexId{x, y - 1}, 1, EdgeDir::undirected},
                                 {VertexId{x + 1, y + 1}, 1, EdgeDir::undirected},
                                 {VertexId{x - 1, y - 1}, 1, EdgeDir::undirected}};
  };
  g.degree = 6;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.girth = 3;
  g.spec = json{{"family", "triangular"}};
  g.family_name = "triangular";
  return g;
}

/// Square/octagon lattice (4,8^2): every Z^2 site blown up into a 4-cycle,
/// with corner c in {0=east,1=north,2=west,3=south}. Height: scaled
/// horizontal coordinate, d = 1.
inline RootedGraph make_square_octagon() {
  RootedGraph g;
  g.root = VertexId{0, 0, 0};
  g.neighbor_rule = [](const VertexId& v) {
    detail::check_key_size(v, 3, "square-octagon");
    const auto x = v.key[0], y = v.key[1], c = v.key[2];
    if (c < 0 || c > 3) throw std::invalid_argument("malformed VertexId for square-octagon");
    std::vector<HalfEdge> out;
    out.push_back({VertexId{x, y, (c + 1) % 4}, 1, EdgeDir::undirected});
    out.push_back({VertexId{x, y, (c + 3) % 4}, 1, EdgeDir::undirected});
    switch (c) {
      case 0: out.push_back({VertexId{x + 1, y, 2}, 1, EdgeDir::undirected}); break;
      case 1: out.push_back({VertexId{x, y + 1, 3}, 1, EdgeDir::undirected}); break;
      case 2: out.push_back({VertexId{x - 1, y, 0}, 1, EdgeDir::undirected}); break;
      default: out.push_back({VertexId{x, y - 1, 1}, 1, EdgeDir::undirected}); break;
    }
    return out;
  };
  g.degree = 3;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.girth = 4;
  // h = 3x + (c==0) - (c==2), shifted so the root (corner 0) sits at 0.
  g.height = HeightFunction{
      [](const VertexId& v) {
        const std::int64_t cx = v.key[2] == 0 ? 1 : (v.key[2] == 2 ? -1 : 0);
        return 3 * static_cast<std::int64_t>(v.key[0]) + cx - 1;
      },
      1, HeightRigor::heuristic};
  g.spec = json{{"family", "square-octagon"}};
  g.family_name = "square-octagon";
  return g;
}

/// Regular tree of degree delta. Ids are path words: the root is the empty
/// word, its children are single letters 0..delta-1, and every other vertex
/// has children formed by appending a letter 0..delta-2.
inline RootedGraph make_tree(int delta) {
  detail::require(delta >= 2, "tree: degree must be >= 2");
  RootedGraph g;
  g.root = VertexId{};
  g.neighbor_rule = [delta](const VertexId& v) {
    std::vector<HalfEdge> out;
    const int child_letters = v.key.empty() ? delta : delta - 1;
    for (const auto x : v.key)
      if (x < 0 || x >= delta) throw std::invalid_argument("malformed VertexId for tree");
    if (!v.key.empty()) {
      VertexId parent = v;
      parent.key.pop_back();
      out.push_back({parent, 1, EdgeDir::undirected});
    }
    for (int c = 0; c < child_letters; ++c) {
      VertexId child = v;
      child.key.push_back(c);
      out.push_back({child, 1, EdgeDir::undirected});
    }
    return out;
  };
  g.degree = delta;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.spec = json{{"family", "tree"}, {"degree", delta}};
  g.family_name = "tree";
  return g;
}

/// Bridge graph B_delta: Z with every alternate pair of consecutive vertices
/// joined by delta-1 parallel edges. Non-simple for delta >= 3.
inline RootedGraph make_bridge(int delta) {
  detail::require(delta >= 2, "bridge: degree must be >= 2");
  RootedGraph g;
  g.root = VertexId{0};
  const std::uint32_t heavy = static_cast<std::uint32_t>(delta - 1);
  g.neighbor_rule = [heavy](const VertexId& v) {
    detail::check_key_size(v, 1, "bridge");
    const auto x = v.key[0];
    // edge (x, x+1) carries delta-1 parallel edges iff x is even
    const bool right_heavy = ((x % 2) + 2) % 2 == 0;
    return std::vector<HalfEdge>{
        {VertexId{x + 1}, right_heavy ? heavy : 1, EdgeDir::undirected},
        {VertexId{x - 1}, right_heavy ? 1 : heavy, EdgeDir::undirected}};
  };
  g.degree = delta;
  g.simple = delta == 2;
  g.transitive_class = TransitiveClass::transitive;
  g.spec = json{{"family", "bridge"}, {"degree", delta}};
  g.family_name = "bridge";
  return g;
}

/// Free product graph K_2 * ... * K_2 * Z_g with delta-2 copies of K_2.
/// Ids are normal-form words: alternating syllables, each either an
/// involution letter a_i (token i in 0..delta-3) or a cycle power c^p
/// (token delta-2+p-1 for p in 1..g-1), no two consecutive syllables from
/// the same factor.
inline RootedGraph make_free_product(int delta, int g_cycle) {
  detail::require(delta >= 3, "free-product: degree must be >= 3");
  detail::require(g_cycle >= 3, "free-product: girth must be >= 3");
  RootedGraph g;
  g.root = VertexId{};
  const int n_inv = delta - 2;
  const int cyc_base = n_inv;  // tokens cyc_base .. cyc_base+g-2 are c^1..c^{g-1}
  auto factor_of = [n_inv](std::int32_t tok) {
    return tok < n_inv ? tok : n_inv;  // all cycle powers share one factor id
  };
  g.neighbor_rule = [n_inv, cyc_base, g_cycle, factor_of](const VertexId& v) {
    for (std::size_t i = 0; i < v.key.size(); ++i) {
      const auto t = v.key[i];
      if (t < 0 || t >= n_inv + g_cycle - 1)
        throw std::invalid_argument("malformed VertexId for free-product");
      if (i > 0 && factor_of(v.key[i - 1]) == factor_of(t))
        throw std::invalid_argument("malformed VertexId for free-product");
    }
    std::vector<HalfEdge> out;
    out.reserve(n_inv + 2);
    const std::int32_t last = v.key.empty() ? -1 : v.key.back();
    // involution generators a_1..a_{delta-2}
    for (int i = 0; i < n_inv; ++i) {
      VertexId w = v;
      if (last == i)
        w.key.pop_back();
      else
        w.key.push_back(i);
      out.push_back({w, 1, EdgeDir::undirected});
    }
    // cycle generators c and c^{-1}
    for (int step : {+1, -1}) {
      VertexId w = v;
      int p = 0;
      if (last >= cyc_base) {
        p = last - cyc_base + 1;
        w.key.pop_back();
      }
      p = ((p + step) % g_cycle + g_cycle) % g_cycle;
      if (p != 0) w.key.push_back(cyc_base + p - 1);
      out.push_back({w, 1, EdgeDir::undirected});
    }
    return out;
  };
  g.degree = delta;
  g.simple = true;
  g.transitive_class = TransitiveClass::transitive;
  g.girth = g_cycle;
  g.spec = json{{"family", "free-product"}, {"degree", delta}, {"girth", g_cycle}};
  g.family_name = "free-product";
  return g;
}

/// Named family dispatch used by the CLI and by graph_from_spec.
inline RootedGraph make_family(const std::string& family, const json& params = json::object()) {
  auto geti = [&params](const char* k, int dflt, bool required = false) {
    if (params.contains(k)) return params.at(k).get<int>();
    if (required) throw std::invalid_argument(std::string("missing parameter ") + k);
    return dflt;
  };
  if (family == "hypercubic") return make_hypercubic(geti("dim", 2));
  if (family == "ladder") return make_ladder();
  if (family == "hexagonal") return make_hexagonal();
  if (family == "triangular") return make_triangular();
  if (family == "square-octagon") return make_square_octagon();
  if (family == "tree") return make_tree(geti("degree", 3));
  if (family == "bridge") return make_bridge(geti("degree", 3));
  if (family == "free-product")
    return make_free_product(geti("degree", 3), geti("girth", 3));
  throw std::invalid_argument("unsupported family: " + family);
}

}  // namespace sawlab
