#pragma once

#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "sawlab/families.hpp"
#include "sawlab/graph.hpp"

namespace sawlab {

namespace detail {

/// Index of `target` in the canonical neighbor list of `u`. Requires a
/// simple graph so the index is unique.
inline int back_index(const RootedGraph& base, const VertexId& u, const VertexId& target) {
  const auto nbrs = base.neighbor_rule(u);
  for (std::size_t k = 0; k < nbrs.size(); ++k)
    if (nbrs[k].to == target) return static_cast<int>(k);
  throw std::logic_error("neighbor symmetry violated in base graph");
}

}  // namespace detail

/// Fisher transformation: every vertex of a cubic simple graph becomes a
/// triangle of corners (v,0),(v,1),(v,2); corner (v,i) also joins the corner
/// of the i-th canonical neighbor of v that points back to v. New ids are
/// the base key with the corner index appended.
inline RootedGraph fisher_transform(const RootedGraph& base) {
  if (base.degree != 3 || !base.simple || base.directed_edges)
    throw std::invalid_argument("fisher_transform requires a cubic simple graph");
  RootedGraph g;
  VertexId root = base.root;
  root.key.push_back(0);
  g.root = root;
  auto base_rule = base.neighbor_rule;
  g.neighbor_rule = [base = base](const VertexId& v) {
    if (v.key.empty()) throw std::invalid_argument("malformed VertexId for fisher graph");
    const std::int32_t corner = v.key.back();
    if (corner < 0 || corner > 2)
      throw std::invalid_argument("malformed VertexId for fisher graph");
    VertexId b = v;
    b.key.pop_back();
    const auto nbrs = base.neighbor_rule(b);
    if (nbrs.size() != 3) throw std::invalid_argument("fisher base vertex not cubic");
    std::vector<HalfEdge> out;
    out.reserve(3);
    for (std::int32_t j = 0; j < 3; ++j) {
      if (j == corner) continue;
      VertexId w = b;
      w.key.push_back(j);
      out.push_back({w, 1, EdgeDir::undirected});
    }
    VertexId u = nbrs[corner].to;
    const int k = detail::back_index(base, u, b);
    u.key.push_back(k);
    out.push_back({u, 1, EdgeDir::undirected});
    return out;
  };
  g.degree = 3;
  g.simple = true;
  g.transitive_class = base.transitive_class;
  g.girth = 3;
  g.spec = json{{"family", "fisher"}, {"base", base.spec}};
  g.canonical_spec = base.canonical_spec;
  g.family_name = "fisher";
  return g;
}

/// Fisher transformation applied only at the black vertices of a two-colored
/// graph. Black vertices must have degree 3 and form an independent set
/// (checked on a finite ball around the root). White vertices keep their
/// neighbor count. Ids append a corner index (always 0 for white vertices).
inline RootedGraph fisher_semicubic(const RootedGraph& base,
                                    std::function<bool(const VertexId&)> black,
                                    const std::string& coloring_tag = "custom") {
  if (base.directed_edges)
    throw std::invalid_argument("fisher_semicubic requires an undirected graph");
  // finite-radius coloring validation
  bool any_black = false;
  {
    std::set<VertexId> seen{base.root};
    std::queue<std::pair<VertexId, int>> q;
    q.push({base.root, 0});
    while (!q.empty()) {
      auto [v, d] = q.front();
      q.pop();
      const bool vb = black(v);
      any_black |= vb;
      const auto nbrs = base.neighbor_rule(v);
      if (vb && nbrs.size() != 3)
        throw std::invalid_argument("fisher_semicubic: black vertex of degree != 3");
      for (const auto& e : nbrs) {
        if (vb && black(e.to))
          throw std::invalid_argument("fisher_semicubic: coloring not proper (adjacent black vertices)");
        if (d < 6 && seen.insert(e.to).second) q.push({e.to, d + 1});
      }
    }
  }
  RootedGraph g;
  VertexId root = base.root;
  root.key.push_back(0);
  g.root = root;
  g.neighbor_rule = [base = base, black](const VertexId& v) {
    if (v.key.empty()) throw std::invalid_argument("malformed VertexId for semicubic graph");
    const std::int32_t corner = v.key.back();
    VertexId b = v;
    b.key.pop_back();
    const bool vb = black(b);
    if (corner < 0 || corner > (vb ? 2 : 0))
      throw std::invalid_argument("malformed VertexId for semicubic graph");
    const auto nbrs = base.neighbor_rule(b);
    std::vector<HalfEdge> out;
    auto attach = [&](const VertexId& u, const VertexId& from, std::uint32_t mult) {
      VertexId w = u;
      w.key.push_back(black(u) ? detail::back_index(base, u, from) : 0);
      out.push_back({w, mult, EdgeDir::undirected});
    };
    if (vb) {
      for (std::int32_t j = 0; j < 3; ++j) {
        if (j == corner) continue;
        VertexId w = b;
        w.key.push_back(j);
        out.push_back({w, 1, EdgeDir::undirected});
      }
      attach(nbrs[corner].to, b, nbrs[corner].multiplicity);
    } else {
      for (const auto& e : nbrs) attach(e.to, b, e.multiplicity);
    }
    return out;
  };
  g.degree = std::max(3, base.degree);
  g.simple = base.simple;
  g.transitive_class = TransitiveClass::quasi_transitive;
  // any black vertex puts a triangle in the graph
  g.girth = any_black ? std::optional<int>(3) : base.girth;
  g.spec = json{{"family", "fisher-semicubic"}, {"base", base.spec}, {"coloring", coloring_tag}};
  g.canonical_spec = base.canonical_spec && coloring_tag == "builtin";
  g.family_name = "fisher-semicubic";
  return g;
}

/// Built-in alternate coloring of the hexagonal lattice: black = even parity
/// of x + y in the brick-wall embedding.
inline RootedGraph fisher_semicubic_hexagonal() {
  return fisher_semicubic(
      make_hexagonal(),
      [](const VertexId& v) { return ((v.key[0] + v.key[1]) % 2 + 2) % 2 == 0; },
      "builtin");
}

/// Directed quotient of Z^2 by the translation (x,y) -> (x+m,y): the square
/// lattice wrapped around a cylinder, with |N(v) ∩ orbit(w)| directed edges
/// from each residue class. For m = 2 the wrap direction carries parallel
/// directed edges of multiplicity 2.
inline RootedGraph quotient_cylinder(int m) {
  detail::require(m >= 2, "quotient_cylinder: m must be >= 2");
  RootedGraph g;
  g.root = VertexId{0, 0};
  g.neighbor_rule = [m](const VertexId& v) {
    detail::check_key_size(v, 2, "cylinder");
    const auto x = v.key[0], y = v.key[1];
    if (x < 0 || x >= m) throw std::invalid_argument("malformed VertexId for cylinder");
    std::vector<HalfEdge> out;
    const std::int32_t right = (x + 1) % m;
    const std::int32_t left = (x - 1 + m) % m;
    if (right == left) {  // m == 2: both horizontal neighbors collapse
      out.push_back({VertexId{right, y}, 2, EdgeDir::out_only});
    } else {
      out.push_back({VertexId{right, y}, 1, EdgeDir::out_only});
      out.push_back({VertexId{left, y}, 1, EdgeDir::out_only});
    }
    out.push_back({VertexId{x, y + 1}, 1, EdgeDir::out_only});
    out.push_back({VertexId{x, y - 1}, 1, EdgeDir::out_only});
    return out;
  };
  g.degree = 4;
  g.simple = false;
  g.directed_edges = true;
  g.transitive_class = TransitiveClass::transitive;
  g.spec = json{{"family", "cylinder"}, {"m", m}};
  g.family_name = "cylinder";
  return g;
}

/// Rebuild any canonically-specified graph from its serialized spec.
inline RootedGraph graph_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("family"))
    throw std::invalid_argument("graph spec must be an object with a family");
  const std::string family = spec.at("family").get<std::string>();
  if (family == "fisher") return fisher_transform(graph_from_spec(spec.at("base")));
  if (family == "fisher-semicubic") {
    if (spec.value("coloring", "") != "builtin" ||
        spec.at("base").value("family", "") != "hexagonal")
      throw std::invalid_argument("only the builtin hexagonal semicubic coloring is serializable");
    return fisher_semicubic_hexagonal();
  }
  if (family == "cylinder") return quotient_cylinder(spec.value("m", 0));
  return make_family(family, spec);
}

}  // namespace sawlab
