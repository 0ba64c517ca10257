#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sawlab {

/// Canonical identifier of a vertex of a lazily defined infinite graph.
///
/// The key is a short sequence of small integers whose interpretation is
/// family-specific: lattice coordinates, tree path words, free-product
/// normal-form words, Fisher decorations, quotient residues. Families must
/// normalise keys on construction so that equality of ids is equality of
/// vertices.
struct VertexId {
  std::vector<std::int32_t> key;

  VertexId() = default;
  explicit VertexId(std::vector<std::int32_t> k) : key(std::move(k)) {}
  VertexId(std::initializer_list<std::int32_t> k) : key(k) {}

  auto operator<=>(const VertexId&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(key[i]);
    }
    s += ')';
    return s;
  }
};

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const {
    std::uint64_t h = 14695981039346656037ull;
    for (std::int32_t x : v.key) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace sawlab
