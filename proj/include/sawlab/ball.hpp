#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sawlab/graph.hpp"

namespace sawlab {

/// Dense indexing of the ball around the root. Vertices are interned in BFS
/// order, so the dense index order is deterministic and index layers give
/// graph distances from the root for free. Adjacency is stored as a CSR of
/// packed slots (head, multiplicity), one slot per distinct target.
class BallIndex {
 public:
  explicit BallIndex(const RootedGraph& g) : g_(&g) {
    intern(g.root, 0);
  }

  /// Expand adjacency for every vertex at distance < r. After this call all
  /// vertices at distance <= r are interned and all walks of length <= r
  /// can be traced on dense indices.
  void ensure_radius(int r) {
    while (expanded_ < ids_.size() && dist_[expanded_] < static_cast<std::uint32_t>(r)) {
      expand(static_cast<std::uint32_t>(expanded_));
      ++expanded_;
    }
    if (radius_ < r) radius_ = r;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(ids_.size()); }
  std::uint32_t expanded_count() const { return static_cast<std::uint32_t>(expanded_); }
  const VertexId& id_of(std::uint32_t i) const { return ids_[i]; }
  std::uint32_t dist(std::uint32_t i) const { return dist_[i]; }
  std::int64_t height(std::uint32_t i) const { return hgt_[i]; }
  bool has_heights() const { return g_->height.has_value(); }
  bool weighted() const { return weighted_; }
  std::uint32_t max_mult() const { return max_mult_; }
  std::uint32_t max_out_slots() const { return max_out_; }
  const RootedGraph& graph() const { return *g_; }

  std::uint32_t index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("vertex not in ball");
    return it->second;
  }
  bool contains(const VertexId& v) const { return index_.count(v) != 0; }

  // CSR access: slots of vertex i are vslot[vofs[i]..vofs[i+1])
  std::uint32_t slots_begin(std::uint32_t i) const { return vofs_[i]; }
  std::uint32_t slots_end(std::uint32_t i) const { return vofs_[i + 1]; }
  std::uint32_t slot_head(std::uint32_t s) const { return static_cast<std::uint32_t>(vslot_[s] >> 32); }
  std::uint32_t slot_mult(std::uint32_t s) const { return static_cast<std::uint32_t>(vslot_[s]); }
  bool is_expanded(std::uint32_t i) const { return i < expanded_; }

 private:
  std::uint32_t intern(const VertexId& v, std::uint32_t d) {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    const auto i = static_cast<std::uint32_t>(ids_.size());
    index_.emplace(v, i);
    ids_.push_back(v);
    dist_.push_back(d);
    hgt_.push_back(g_->height ? g_->height->eval(v) : 0);
    return i;
  }

  void expand(std::uint32_t i) {
    // vertices are expanded in index order, so CSR appends stay contiguous
    if (vofs_.size() != i + 1) throw std::logic_error("ball expansion out of order");
    const auto nbrs = g_->neighbor_rule(ids_[i]);
    for (const auto& e : nbrs) {
      if (e.to == ids_[i]) throw std::logic_error("neighbor rule produced a loop");
      const auto j = intern(e.to, dist_[i] + 1);
      vslot_.push_back((static_cast<std::uint64_t>(j) << 32) | e.multiplicity);
      if (e.multiplicity > 1) weighted_ = true;
      if (e.multiplicity > max_mult_) max_mult_ = e.multiplicity;
    }
    vofs_.push_back(static_cast<std::uint32_t>(vslot_.size()));
    max_out_ = std::max<std::uint32_t>(max_out_, static_cast<std::uint32_t>(nbrs.size()));
  }

  const RootedGraph* g_;
  std::unordered_map<VertexId, std::uint32_t, VertexIdHash> index_;
  std::vector<VertexId> ids_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::int64_t> hgt_;
  std::vector<std::uint32_t> vofs_{0};
  std::vector<std::uint64_t> vslot_;  // (head<<32)|mult
  std::size_t expanded_ = 0;
  int radius_ = 0;
  bool weighted_ = false;
  std::uint32_t max_mult_ = 1;
  std::uint32_t max_out_ = 0;
};

}  // namespace sawlab
