#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sawlab/ball.hpp"
#include "sawlab/bigint.hpp"
#include "sawlab/graph.hpp"

namespace sawlab {

/// Enumeration failed to fit in the node-visit budget where no partial
/// result is possible (scalar and map-valued counts, sampling).
class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::uint64_t node_budget = 5'000'000'000ull;
  int split_depth = 4;  // prefix depth for parallel tasks

  int effective_workers() const {
    if (workers > 0) return workers;
    const auto hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
};

enum class SeriesKind : std::uint8_t { saw, bridge, extendable, endpoint };

inline const char* to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::saw: return "saw";
    case SeriesKind::bridge: return "bridge";
    case SeriesKind::extendable: return "extendable";
    default: return "endpoint";
  }
}

/// Exact count sequence sigma_0..sigma_N (or b_0..b_N). If `truncated`, the
/// node-visit budget ran out and only the levels present are populated.
struct CountSeries {
  SeriesKind kind = SeriesKind::saw;
  std::vector<BigInt> values;
  std::string graph_key;
  json params = json::object();
  bool truncated = false;
  int n_requested = 0;
  std::optional<HeightRigor> rigor;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

namespace detail {

// Budgets are capped so that u64 per-task level tallies cannot overflow
// (a level total is at most degree * interior-node count).
inline constexpr std::uint64_t kBudgetCap = 1ull << 57;

// ---------------------------------------------------------------------------
// Flat forward-edge structure: edge ids coincide with ball slot indices.
// Every edge has exactly `fwd` forward slots (padded with a sentinel edge
// whose head is a permanently-visited dummy vertex), so the inner loops have
// a compile-time trip count.
// ---------------------------------------------------------------------------
struct EdgeCsr {
  std::vector<std::uint64_t> eslot;  // (E+1)*fwd entries: (head<<32)|edge
  std::vector<std::uint32_t> etail;  // edge -> tail vertex
  std::uint32_t n_edges = 0;
  std::uint32_t dummy = 0;  // ball.size(): always-visited pad vertex
  int fwd = 0;

  void build(const BallIndex& ball) {
    n_edges = 0;
    const std::uint32_t nv = ball.expanded_count();
    etail.clear();
    for (std::uint32_t v = 0; v < nv; ++v)
      for (std::uint32_t s = ball.slots_begin(v); s < ball.slots_end(v); ++s) etail.push_back(v);
    n_edges = static_cast<std::uint32_t>(etail.size());
    dummy = ball.size();
    // forward degree: slots of the head minus the back slot
    fwd = 1;
    for (std::uint32_t e = 0; e < n_edges; ++e) {
      const auto u = ball.slot_head(e);
      if (!ball.is_expanded(u)) continue;
      int cnt = 0;
      for (std::uint32_t s = ball.slots_begin(u); s < ball.slots_end(u); ++s)
        if (ball.slot_head(s) != etail[e]) ++cnt;
      fwd = std::max(fwd, cnt);
    }
    const std::uint64_t sentinel_slot =
        (static_cast<std::uint64_t>(dummy) << 32) | n_edges;
    eslot.assign(static_cast<std::size_t>(n_edges + 1) * fwd, sentinel_slot);
    for (std::uint32_t e = 0; e < n_edges; ++e) {
      const auto u = ball.slot_head(e);
      if (!ball.is_expanded(u)) continue;
      std::size_t p = static_cast<std::size_t>(e) * fwd;
      for (std::uint32_t s = ball.slots_begin(u); s < ball.slots_end(u); ++s)
        if (ball.slot_head(s) != etail[e])
          eslot[p++] = (static_cast<std::uint64_t>(ball.slot_head(s)) << 32) | s;
    }
  }
};

struct KernelCtx {
  const std::uint64_t* eslot;
  const BallIndex* ball;  // for multiplicities (slot id == edge id) and heights
  std::uint8_t* vis;
  int fwd;

  std::uint32_t mult(std::uint32_t edge) const { return ball->slot_mult(edge); }
};

// ---------------------------------------------------------------------------
// Series kernel for simple (multiplicity-1) graphs: counts walks at every
// depth with parent-side tallies. c points at the arrival depth: descendants
// of the current vertex are tallied into c[1], c[2], ... The current vertex
// itself was tallied by its parent. tail<1> and tail<2> do not mark the
// arrival vertex: two-step completions u -> w -> x have x != u structurally
// (forward slots of the edge (u,w) exclude u) and x != w by looplessness.
// ---------------------------------------------------------------------------
template <int LEFT, int FWD>
inline void series_tail(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u,
                        std::uint64_t* c) {
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * FWD];
  if constexpr (LEFT == 1) {
    std::uint64_t s1 = 0;
    for (int i = 0; i < FWD; ++i)
      s1 += 1u - ctx.vis[static_cast<std::uint32_t>(sl[i] >> 32)];
    c[1] += s1;
  } else if constexpr (LEFT == 2) {
    std::uint64_t c1 = 0, c2 = 0;
    for (int i = 0; i < FWD; ++i) {
      const std::uint64_t s = sl[i];
      const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
      if (__builtin_expect(ctx.vis[w], 0)) continue;
      c1 += 1;
      const std::uint64_t* sl2 =
          &ctx.eslot[static_cast<std::size_t>(static_cast<std::uint32_t>(s)) * FWD];
      std::uint64_t t = 0;
      for (int j = 0; j < FWD; ++j)
        t += 1u - ctx.vis[static_cast<std::uint32_t>(sl2[j] >> 32)];
      c2 += t;
    }
    c[1] += c1;
    c[2] += c2;
  } else {
    ctx.vis[u] = 1;
    std::uint64_t c1 = 0;
    for (int i = 0; i < FWD; ++i) {
      const std::uint64_t s = sl[i];
      const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
      if (__builtin_expect(!ctx.vis[w], 1)) {
        c1 += 1;
        series_tail<LEFT - 1, FWD>(ctx, static_cast<std::uint32_t>(s), w, c + 1);
      }
    }
    c[1] += c1;
    ctx.vis[u] = 0;
  }
}

inline constexpr int kTailDepth = 20;

template <int FWD>
void series_go(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, std::uint64_t* c,
               int left) {
  if (left <= kTailDepth) {
    switch (left) {
#define SAWLAB_TAIL_CASE(k) \
  case k: series_tail<k, FWD>(ctx, e, u, c); return;
      SAWLAB_TAIL_CASE(1)
      SAWLAB_TAIL_CASE(2)
      SAWLAB_TAIL_CASE(3)
      SAWLAB_TAIL_CASE(4)
      SAWLAB_TAIL_CASE(5)
      SAWLAB_TAIL_CASE(6)
      SAWLAB_TAIL_CASE(7)
      SAWLAB_TAIL_CASE(8)
      SAWLAB_TAIL_CASE(9)
      SAWLAB_TAIL_CASE(10)
      SAWLAB_TAIL_CASE(11)
      SAWLAB_TAIL_CASE(12)
      SAWLAB_TAIL_CASE(13)
      SAWLAB_TAIL_CASE(14)
      SAWLAB_TAIL_CASE(15)
      SAWLAB_TAIL_CASE(16)
      SAWLAB_TAIL_CASE(17)
      SAWLAB_TAIL_CASE(18)
      SAWLAB_TAIL_CASE(19)
      SAWLAB_TAIL_CASE(20)
#undef SAWLAB_TAIL_CASE
      default: break;
    }
  }
  ctx.vis[u] = 1;
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * FWD];
  std::uint64_t c1 = 0;
  for (int i = 0; i < FWD; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      c1 += 1;
      series_go<FWD>(ctx, static_cast<std::uint32_t>(s), w, c + 1, left - 1);
    }
  }
  c[1] += c1;
  ctx.vis[u] = 0;
}

// Runtime-stride variant for degrees beyond the specialized set.
inline void series_go_gen(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u,
                          std::uint64_t* c, int left) {
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  if (left == 1) {
    std::uint64_t s1 = 0;
    for (int i = 0; i < ctx.fwd; ++i)
      s1 += 1u - ctx.vis[static_cast<std::uint32_t>(sl[i] >> 32)];
    c[1] += s1;
    return;
  }
  ctx.vis[u] = 1;
  std::uint64_t c1 = 0;
  for (int i = 0; i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      c1 += 1;
      series_go_gen(ctx, static_cast<std::uint32_t>(s), w, c + 1, left - 1);
    }
  }
  c[1] += c1;
  ctx.vis[u] = 0;
}

// Unweighted per-level node tallies for the weighted kernels (the weighted
// counts themselves are not a work measure).
template <bool W>
void series_go_counting(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u,
                        std::uint64_t* c, std::uint64_t* uc, int left, std::uint64_t wgt) {
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  if (left == 1) {
    std::uint64_t s1 = 0, u1 = 0;
    for (int i = 0; i < ctx.fwd; ++i) {
      const std::uint64_t s = sl[i];
      const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
      const std::uint64_t ok = 1u - ctx.vis[w];
      u1 += ok;
      if constexpr (W)
        s1 += ok * wgt * ctx.mult(static_cast<std::uint32_t>(s));
      else
        s1 += ok;
    }
    c[1] += s1;
    uc[1] += u1;
    return;
  }
  ctx.vis[u] = 1;
  std::uint64_t c1 = 0, u1 = 0;
  for (int i = 0; i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      const std::uint32_t f = static_cast<std::uint32_t>(s);
      std::uint64_t wf = 1;
      if constexpr (W) wf = wgt * ctx.mult(f);
      c1 += wf;
      u1 += 1;
      series_go_counting<W>(ctx, f, w, c + 1, uc + 1, left - 1, wf);
    }
  }
  c[1] += c1;
  uc[1] += u1;
  ctx.vis[u] = 0;
}

// Fallback with exact BigInt weights and tallies, for weighted graphs whose
// weighted counts may not fit in 64 bits.
inline void series_go_big(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u,
                          WideCount* c, std::uint64_t* uc, int left, const BigInt& wgt) {
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  ctx.vis[u] = 1;
  for (int i = 0; i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      const BigInt wf = wgt * ctx.mult(static_cast<std::uint32_t>(s));
      c[1].add(wf);
      uc[1] += 1;
      if (left > 1) series_go_big(ctx, static_cast<std::uint32_t>(s), w, c + 1, uc + 1, left - 1, wf);
    }
  }
  ctx.vis[u] = 0;
}

// ---------------------------------------------------------------------------
// Bridge kernel. A walk of length d from the root is a bridge iff every
// height after the start is >= 1 (enforced by pruning) and the final height
// equals the running maximum. Tallies are per-node, at the walk's own depth.
// ---------------------------------------------------------------------------
template <bool W>
void bridge_go(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, std::uint64_t* c,
               std::uint64_t* uc, int left, std::uint64_t wgt, std::int64_t runmax) {
  const std::int64_t h = ctx.ball->height(u);
  if (h >= runmax) {
    runmax = h;
    c[0] += W ? wgt : 1;
  }
  uc[0] += 1;
  if (left == 0) return;
  ctx.vis[u] = 1;
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  for (int i = 0; i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w] && ctx.ball->height(w) >= 1) {
      std::uint64_t wf = 1;
      if constexpr (W) wf = wgt * ctx.mult(static_cast<std::uint32_t>(s));
      bridge_go<W>(ctx, static_cast<std::uint32_t>(s), w, c + 1, uc + 1, left - 1, wf, runmax);
    }
  }
  ctx.vis[u] = 0;
}

struct EnumPrefix {
  std::uint32_t edge = 0;  // arrival edge at the endpoint
  std::uint32_t endpoint = 0;
  std::vector<std::uint32_t> walk;  // root..endpoint
  std::uint64_t weight = 1;
  std::int64_t runmax = 0;  // bridges
};

struct EnumPrefixSet {
  int depth = 0;
  std::vector<EnumPrefix> tasks;
  std::vector<std::uint64_t> shallow;    // weighted tallies for levels 0..depth
  std::vector<std::uint64_t> shallow_u;  // unweighted tallies
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumerator: owns the ball, the flat edge structure, the prefix tasks and
// the chunked, budgeted, parallel counting pipeline.
// ---------------------------------------------------------------------------
class Enumerator {
 public:
  Enumerator(const RootedGraph& g, EnumOptions opts = {})
      : g_(&g), opts_(opts), ball_(g) {
    opts_.node_budget = std::min(opts_.node_budget, detail::kBudgetCap);
    if (opts_.split_depth < 1) opts_.split_depth = 1;
  }

  const BallIndex& ball() const { return ball_; }
  const RootedGraph& graph() const { return *g_; }
  std::uint64_t visits_spent() const { return spent_; }

  /// sigma_0..sigma_n (weighted by edge multiplicities), chunked and budgeted.
  CountSeries saw_series(int n) { return series(n, /*bridge=*/false); }

  /// b_0..b_n for the graph's height function.
  CountSeries bridge_series(int n) {
    if (!g_->height) throw std::invalid_argument("count_bridges requires a height function");
    return series(n, /*bridge=*/true);
  }

  /// Endpoint-resolved exact counts at level n.
  std::map<VertexId, BigInt> endpoint_counts(int n);

  /// Number of n-step walks extendable to n+m steps.
  BigInt extendable_count(int n, int m);

  /// Walks at given positions of the canonical enumeration order of level n.
  /// `ranks` must be sorted; each entry < (weighted) sigma_n < 2^63.
  std::vector<std::vector<VertexId>> walks_at_ranks(int n, const std::vector<std::uint64_t>& ranks);

  /// Level-n total as u64, with per-task subtotals (sampling support).
  std::uint64_t level_total_u64(int n, std::vector<std::uint64_t>* per_task = nullptr);

 private:
  using PrefixSet = detail::EnumPrefixSet;

  CountSeries series(int n, bool bridge);
  void run_chunk(int hi, bool bridge, std::vector<WideCount>& counts,
                 std::vector<std::uint64_t>& ucounts);
  void prepare(int hi);
  PrefixSet& prefixes(bool bridge, int depth);
  void enumerate_prefixes(PrefixSet& ps, bool bridge);
  int pick_split(int hi) const;

  template <class TaskFn>
  void parallel_tasks(std::size_t n_tasks, const TaskFn& fn);

  const RootedGraph* g_;
  EnumOptions opts_;
  BallIndex ball_;
  detail::EdgeCsr csr_;
  std::uint32_t csr_built_slots_ = 0xffffffffu;
  std::optional<PrefixSet> saw_prefixes_, bridge_prefixes_;
  std::uint64_t spent_ = 0;
};

// ---------------- implementation ----------------

inline void Enumerator::prepare(int hi) {
  ball_.ensure_radius(hi);
  // prefix arrival edges reference slot ids, which only ever grow: the
  // slots of previously expanded vertices keep their indices, so cached
  // prefixes stay valid across rebuilds.
  if (csr_built_slots_ != ball_.expanded_count()) {
    csr_.build(ball_);
    csr_built_slots_ = ball_.expanded_count();
  }
}

inline int Enumerator::pick_split(int hi) const {
  int p = std::min(opts_.split_depth, hi - 2);
  if (p < 1) return 0;
  // keep the task list moderate for very high degrees
  double est = 1;
  const double b = std::max(1, g_->degree - 1);
  while (p > 1 && est * std::pow(b, p) > 200000) --p;
  return p;
}

template <class TaskFn>
inline void Enumerator::parallel_tasks(std::size_t n_tasks, const TaskFn& fn) {
  const int nw = std::max(1, std::min<int>(opts_.effective_workers(), static_cast<int>(n_tasks)));
  if (nw == 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) fn(t, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
        if (t >= n_tasks) return;
        fn(t, w);
      }
    });
  }
  for (auto& th : pool) th.join();
}

inline void Enumerator::enumerate_prefixes(PrefixSet& ps, bool bridge) {
  ps.shallow.assign(ps.depth + 1, 0);
  ps.shallow_u.assign(ps.depth + 1, 0);
  ps.tasks.clear();
  std::vector<std::uint8_t> vis(ball_.size() + 1, 0);
  std::vector<std::uint32_t> walk{0};
  vis[0] = 1;
  ps.shallow[0] = 1;  // the empty walk (b_0 = 1 by convention)
  ps.shallow_u[0] = 1;
  // depth-first over ball slots; arrival edge = slot index
  auto rec = [&](auto&& self, std::uint32_t v, int depth, std::uint64_t wgt,
                 std::int64_t runmax, std::uint32_t arrival) -> void {
    if (depth > 0) {
      const bool counts_here = !bridge || ball_.height(v) >= runmax;
      const std::int64_t rm = bridge ? std::max(runmax, ball_.height(v)) : 0;
      if (counts_here) {
        ps.shallow[depth] += wgt;
      }
      ps.shallow_u[depth] += 1;
      if (depth == ps.depth) {
        detail::EnumPrefix p;
        p.edge = arrival;
        p.endpoint = v;
        p.walk = walk;
        p.weight = wgt;
        p.runmax = rm;
        ps.tasks.push_back(std::move(p));
        return;
      }
      runmax = rm;
    }
    for (std::uint32_t s = ball_.slots_begin(v); s < ball_.slots_end(v); ++s) {
      const auto w = ball_.slot_head(s);
      if (vis[w]) continue;
      if (bridge && ball_.height(w) < 1) continue;
      vis[w] = 1;
      walk.push_back(w);
      self(self, w, depth + 1, wgt * ball_.slot_mult(s), runmax, s);
      walk.pop_back();
      vis[w] = 0;
    }
  };
  rec(rec, 0, 0, 1, bridge ? 1 : 0, 0);
}

inline Enumerator::PrefixSet& Enumerator::prefixes(bool bridge, int depth) {
  auto& slot = bridge ? bridge_prefixes_ : saw_prefixes_;
  if (!slot || slot->depth != depth) {
    slot.emplace();
    slot->depth = depth;
    enumerate_prefixes(*slot, bridge);
  }
  return *slot;
}

inline void Enumerator::run_chunk(int hi, bool bridge, std::vector<WideCount>& counts,
                                  std::vector<std::uint64_t>& ucounts) {
  prepare(hi);
  counts.assign(hi + 1, WideCount{});
  ucounts.assign(hi + 1, 0);

  const bool weighted = ball_.weighted();
  // weighted counts may outgrow u64: check against the worst-case bound
  // degree^hi * max_mult^hi and fall back to exact BigInt weights.
  bool big = false;
  if (weighted) {
    const double bound = hi * (std::log2(static_cast<double>(std::max(2, g_->degree))) +
                               std::log2(static_cast<double>(ball_.max_mult())));
    big = bound >= 60.0;
    if (big && bridge)
      throw budget_error("weighted bridge counts exceed the machine-word range");
  }

  const int split = pick_split(hi);
  struct WorkerAcc {
    std::vector<WideCount> wc;
    std::vector<std::uint64_t> uc;
  };

  auto make_ctx = [&](std::vector<std::uint8_t>& vis) {
    detail::KernelCtx ctx;
    ctx.eslot = csr_.eslot.data();
    ctx.ball = &ball_;
    ctx.vis = vis.data();
    ctx.fwd = csr_.fwd;
    return ctx;
  };

  auto run_from = [&](detail::KernelCtx& ctx, std::uint32_t e, std::uint32_t u, int left,
                      std::uint64_t wgt, std::int64_t runmax, std::uint64_t* c,
                      std::uint64_t* uc, WideCount* wc) {
    if (bridge) {
      if (weighted)
        detail::bridge_go<true>(ctx, e, u, c, uc, left, wgt, runmax);
      else
        detail::bridge_go<false>(ctx, e, u, c, uc, left, wgt, runmax);
      return;
    }
    if (big) {
      detail::series_go_big(ctx, e, u, wc, uc, left, BigInt(wgt));
      return;
    }
    if (weighted) {
      detail::series_go_counting<true>(ctx, e, u, c, uc, left, wgt);
      return;
    }
    switch (csr_.fwd) {
      case 1: detail::series_go<1>(ctx, e, u, c, left); break;
      case 2: detail::series_go<2>(ctx, e, u, c, left); break;
      case 3: detail::series_go<3>(ctx, e, u, c, left); break;
      case 4: detail::series_go<4>(ctx, e, u, c, left); break;
      case 5: detail::series_go<5>(ctx, e, u, c, left); break;
      case 6: detail::series_go<6>(ctx, e, u, c, left); break;
      default: detail::series_go_gen(ctx, e, u, c, left); break;
    }
  };

  if (split == 0) {
    // single task from the root
    std::vector<std::uint8_t> vis(ball_.size() + 1, 0);
    vis[csr_.dummy] = 1;
    auto ctx = make_ctx(vis);
    std::vector<std::uint64_t> c(hi + 2, 0), uc(hi + 2, 0);
    std::vector<WideCount> wc(hi + 2);
    if (bridge) {
      // seed the empty walk, then start per root slot with the h >= 1 prune
      c[0] = 1;
      uc[0] = 1;
      vis[0] = 1;
      if (hi >= 1) {
        for (std::uint32_t s = ball_.slots_begin(0); s < ball_.slots_end(0); ++s) {
          const auto w = ball_.slot_head(s);
          if (ball_.height(w) < 1) continue;
          const std::uint64_t wf = weighted ? ball_.slot_mult(s) : 1;
          detail::KernelCtx bctx = ctx;
          if (weighted)
            detail::bridge_go<true>(bctx, s, w, c.data() + 1, uc.data() + 1, hi - 1, wf, 1);
          else
            detail::bridge_go<false>(bctx, s, w, c.data() + 1, uc.data() + 1, hi - 1, wf, 1);
        }
      }
    } else {
      c[0] = 1;
      uc[0] = 1;
      vis[0] = 1;
      if (hi >= 1) {
        for (std::uint32_t s = ball_.slots_begin(0); s < ball_.slots_end(0); ++s) {
          const auto w = ball_.slot_head(s);
          const std::uint64_t wf = weighted ? ball_.slot_mult(s) : 1;
          if (big) {
            wc[1].add(BigInt(wf));
            uc[1] += 1;
            if (hi >= 2) detail::series_go_big(ctx, s, w, wc.data() + 1, uc.data() + 1, hi - 1, BigInt(wf));
          } else {
            c[1] += wf;
            uc[1] += 1;
            if (hi >= 2) run_from(ctx, s, w, hi - 1, wf, 0, c.data() + 1, uc.data() + 1, wc.data() + 1);
          }
        }
      }
    }
    for (int d = 0; d <= hi; ++d) {
      counts[d].add(c[d]);
      counts[d].add(wc[d].total());
      ucounts[d] += bridge || weighted || big ? uc[d] : c[d];
    }
    std::uint64_t v = 0;
    for (int d = 0; d < hi; ++d) v += ucounts[d];
    spent_ += v;
    return;
  }

  auto& ps = prefixes(bridge, split);
  for (int d = 0; d <= std::min(split, hi); ++d) {
    counts[d].add(ps.shallow[d]);
    ucounts[d] += ps.shallow_u[d];
  }

  const int nw = std::max(1, std::min<int>(opts_.effective_workers(),
                                           std::max<std::size_t>(1, ps.tasks.size())));
  std::vector<WorkerAcc> acc(nw);
  std::vector<std::vector<std::uint8_t>> wvis(nw);
  for (auto& a : acc) {
    a.wc.assign(hi + 1, WideCount{});
    a.uc.assign(hi + 1, 0);
  }
  for (auto& v : wvis) {
    v.assign(ball_.size() + 1, 0);
    v[csr_.dummy] = 1;
  }

  parallel_tasks(ps.tasks.size(), [&](std::size_t t, int w) {
    auto& task = ps.tasks[t];
    auto& vis = wvis[w];
    auto ctx = make_ctx(vis);
    for (auto m : task.walk) vis[m] = 1;
    vis[task.endpoint] = 0;  // arrival vertex is marked by the kernel itself
    std::vector<std::uint64_t> c(hi + 2, 0), uc(hi + 2, 0);
    std::vector<WideCount> wc(hi + 2);
    run_from(ctx, task.edge, task.endpoint, hi - split, task.weight, task.runmax,
             c.data(), uc.data(), wc.data());
    for (auto m : task.walk) vis[m] = 0;
    auto& a = acc[w];
    for (int d = split + 1; d <= hi; ++d) {
      const int r = d - split;
      a.wc[d].add(c[r]);
      a.wc[d].add(wc[r].total());
      a.uc[d] += bridge || weighted || big ? uc[r] : c[r];
    }
  });

  for (const auto& a : acc)
    for (int d = split + 1; d <= hi; ++d) {
      counts[d].add(a.wc[d].total());
      ucounts[d] += a.uc[d];
    }
  std::uint64_t v = 0;
  for (int d = 0; d < hi; ++d) v += ucounts[d];
  spent_ += v;
}

inline CountSeries Enumerator::series(int n, bool bridge) {
  if (n < 0) throw std::invalid_argument("series length must be >= 0");
  CountSeries out;
  out.kind = bridge ? SeriesKind::bridge : SeriesKind::saw;
  out.graph_key = g_->key();
  out.n_requested = n;
  if (bridge) out.rigor = g_->height->rigor;

  std::vector<WideCount> counts;
  std::vector<std::uint64_t> ucounts;
  int have = -1;
  std::vector<std::uint64_t> ulevels;  // unweighted tallies of the last chunk

  auto emit = [&](int hi) {
    out.values.clear();
    for (int d = 0; d <= hi; ++d) out.values.push_back(counts[d].total());
  };

  while (have < n) {
    int hi;
    if (have < 0) {
      hi = std::min(n, 6);
    } else {
      // project chunk [0..H] interior-node cost from observed level growth.
      // The geometric mean of the last two ratios cancels the period-2
      // oscillation of near-bipartite counts; one flat safety factor on top.
      double ratio = 1.02;
      if (have >= 2 && ulevels[have - 1] > 0 && ulevels[have - 2] > 0) {
        const double r1 = static_cast<double>(ulevels[have]) / ulevels[have - 1];
        const double r2 = static_cast<double>(ulevels[have - 1]) / ulevels[have - 2];
        ratio = std::max(ratio, std::sqrt(r1 * r2));
      } else if (have >= 1 && ulevels[have - 1] > 0) {
        ratio = std::max(ratio, static_cast<double>(ulevels[have]) / ulevels[have - 1]);
      }
      ratio = std::min(ratio, static_cast<double>(std::max(2, g_->degree)));
      const double safety = 1.3;
      const std::uint64_t remaining =
          opts_.node_budget > spent_ ? opts_.node_budget - spent_ : 0;
      double base = 0;
      for (int d = 0; d < have; ++d) base += static_cast<double>(ulevels[d]);
      double extra = static_cast<double>(std::max<std::uint64_t>(ulevels[have], 1));
      int h = have;
      double projected = base;
      // chunks roughly double in depth so the re-walked prefixes stay a
      // vanishing fraction of the final chunk; the projection only caps h
      // when the budget binds (compounded ratio error keeps it conservative)
      const int step_target = std::min(n, std::max(2 * have + 2, have + 4));
      while (h < step_target) {
        projected += extra;
        if (projected * safety > static_cast<double>(remaining)) break;
        ++h;
        extra *= ratio;
      }
      if (h <= have) {
        out.truncated = true;
        break;
      }
      hi = h;
    }
    run_chunk(hi, bridge, counts, ucounts);
    have = hi;
    ulevels = ucounts;
    if (spent_ > opts_.node_budget && have < n) {
      out.truncated = true;
      break;
    }
  }
  emit(have);
  return out;
}

inline std::uint64_t Enumerator::level_total_u64(int n, std::vector<std::uint64_t>* per_task) {
  // One counting pass at level n recording per-task subtotals.
  prepare(n);
  if (ball_.weighted()) {
    const double bound = n * (std::log2(static_cast<double>(std::max(2, g_->degree))) +
                              std::log2(static_cast<double>(ball_.max_mult())));
    if (bound >= 60.0) throw budget_error("weighted counts too large for sampling");
  }
  const int split = pick_split(n);
  if (split == 0) {
    std::vector<WideCount> counts;
    std::vector<std::uint64_t> ucounts;
    run_chunk(n, false, counts, ucounts);
    const BigInt total = counts[n].total();
    if (total >= BigInt(1) << 62) throw budget_error("level total exceeds sampling range");
    if (per_task) *per_task = {total.convert_to<std::uint64_t>()};
    return total.convert_to<std::uint64_t>();
  }
  auto& ps = prefixes(false, split);
  std::vector<std::uint64_t> totals(ps.tasks.size(), 0);
  const bool weighted = ball_.weighted();
  std::vector<std::vector<std::uint8_t>> wvis(opts_.effective_workers());
  for (auto& v : wvis) {
    v.assign(ball_.size() + 1, 0);
    v[csr_.dummy] = 1;
  }
  parallel_tasks(ps.tasks.size(), [&](std::size_t t, int w) {
    auto& task = ps.tasks[t];
    auto& vis = wvis[w];
    detail::KernelCtx ctx{csr_.eslot.data(), &ball_, vis.data(), csr_.fwd};
    for (auto m : task.walk) vis[m] = 1;
    vis[task.endpoint] = 0;
    std::vector<std::uint64_t> c(n - split + 2, 0), uc(n - split + 2, 0);
    if (weighted)
      detail::series_go_counting<true>(ctx, task.edge, task.endpoint, c.data(), uc.data(),
                                       n - split, task.weight);
    else
      detail::series_go_gen(ctx, task.edge, task.endpoint, c.data(), n - split);
    for (auto m : task.walk) vis[m] = 0;
    totals[t] = c[n - split];
  });
  std::uint64_t sum = 0;
  for (auto t : totals) {
    if (__builtin_add_overflow(sum, t, &sum)) throw budget_error("level total overflow");
  }
  if (per_task) *per_task = std::move(totals);
  return sum;
}

namespace detail {

/// Shared budget sentinel for the non-chunked kernels: workers draw nodes in
/// blocks from a global pool and bail out when it runs dry.
struct BudgetGate {
  std::atomic<std::uint64_t> drawn{0};
  std::uint64_t limit = 0;
  static constexpr std::uint64_t kBlock = 8192;

  bool draw(std::uint64_t& local) {
    if (--local != 0) return true;
    local = kBlock;
    return drawn.fetch_add(kBlock, std::memory_order_relaxed) < limit;
  }
};

struct EndpointScratch {
  std::vector<std::uint8_t> vis;
  std::vector<std::uint64_t> acc;
  std::vector<std::uint32_t> touched;
};

template <bool W>
bool endpoint_go(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, int left,
                 std::uint64_t wgt, EndpointScratch& sc, BudgetGate& gate,
                 std::uint64_t& block) {
  if (!gate.draw(block)) return false;
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  if (left == 1) {
    for (int i = 0; i < ctx.fwd; ++i) {
      const std::uint64_t s = sl[i];
      const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
      if (ctx.vis[w]) continue;
      if (!sc.acc[w]) sc.touched.push_back(w);
      sc.acc[w] += W ? wgt * ctx.mult(static_cast<std::uint32_t>(s)) : 1;
    }
    return true;
  }
  ctx.vis[u] = 1;
  bool ok = true;
  for (int i = 0; ok && i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      std::uint64_t wf = 1;
      if constexpr (W) wf = wgt * ctx.mult(static_cast<std::uint32_t>(s));
      ok = endpoint_go<W>(ctx, static_cast<std::uint32_t>(s), w, left - 1, wf, sc, gate, block);
    }
  }
  ctx.vis[u] = 0;
  return ok;
}

inline bool extend_ok(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, int m,
                      BudgetGate& gate, std::uint64_t& block, bool& alive) {
  if (m == 0) return true;
  if (!gate.draw(block)) {
    alive = false;
    return false;
  }
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  ctx.vis[u] = 1;
  bool found = false;
  for (int i = 0; !found && alive && i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w])
      found = extend_ok(ctx, static_cast<std::uint32_t>(s), w, m - 1, gate, block, alive);
  }
  ctx.vis[u] = 0;
  return found;
}

template <bool W>
bool extendable_go(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, int left, int m,
                   std::uint64_t wgt, std::uint64_t& acc, BudgetGate& gate,
                   std::uint64_t& block) {
  if (!gate.draw(block)) return false;
  if (left == 0) {
    bool alive = true;
    if (extend_ok(ctx, e, u, m, gate, block, alive)) acc += W ? wgt : 1;
    return alive;
  }
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  ctx.vis[u] = 1;
  bool ok = true;
  for (int i = 0; ok && i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      std::uint64_t wf = 1;
      if constexpr (W) wf = wgt * ctx.mult(static_cast<std::uint32_t>(s));
      ok = extendable_go<W>(ctx, static_cast<std::uint32_t>(s), w, left - 1, m, wf, acc, gate, block);
    }
  }
  ctx.vis[u] = 0;
  return ok;
}

struct SweepState {
  const std::uint64_t* ranks = nullptr;
  std::size_t pos = 0, end = 0;
  std::uint64_t cum = 0;
  std::vector<std::uint32_t> path;
  std::vector<std::vector<std::uint32_t>>* out = nullptr;
  std::size_t out_base = 0;
};

/// Sweeps the canonical enumeration order of level-n walks, emitting the
/// walks whose (weight-expanded) positions match the requested ranks.
template <bool W>
bool sweep_go(const KernelCtx& ctx, std::uint32_t e, std::uint32_t u, int left,
              std::uint64_t wgt, SweepState& st) {
  st.path.push_back(u);
  if (left == 0) {
    const std::uint64_t end = st.cum + wgt;
    while (st.pos < st.end && st.ranks[st.pos] < end) {
      (*st.out)[st.out_base + st.pos] = st.path;
      ++st.pos;
    }
    st.cum = end;
    st.path.pop_back();
    return st.pos >= st.end;
  }
  const std::uint64_t* sl = &ctx.eslot[static_cast<std::size_t>(e) * ctx.fwd];
  ctx.vis[u] = 1;
  bool done = false;
  for (int i = 0; !done && i < ctx.fwd; ++i) {
    const std::uint64_t s = sl[i];
    const std::uint32_t w = static_cast<std::uint32_t>(s >> 32);
    if (!ctx.vis[w]) {
      std::uint64_t wf = 1;
      if constexpr (W) wf = wgt * ctx.mult(static_cast<std::uint32_t>(s));
      done = sweep_go<W>(ctx, static_cast<std::uint32_t>(s), w, left - 1, wf, st);
    }
  }
  ctx.vis[u] = 0;
  st.path.pop_back();
  return done;
}

}  // namespace detail

inline std::map<VertexId, BigInt> Enumerator::endpoint_counts(int n) {
  if (n < 0) throw std::invalid_argument("endpoint_counts: n must be >= 0");
  std::map<VertexId, BigInt> out;
  if (n == 0) {
    out[g_->root] = 1;
    return out;
  }
  prepare(n);
  const bool weighted = ball_.weighted();
  if (weighted) {
    const double bound = n * (std::log2(static_cast<double>(std::max(2, g_->degree))) +
                              std::log2(static_cast<double>(ball_.max_mult())));
    if (bound >= 60.0)
      throw budget_error("weighted endpoint counts exceed the machine-word range");
  }
  detail::BudgetGate gate;
  gate.limit = opts_.node_budget > spent_ ? opts_.node_budget - spent_ : 0;

  const int split = pick_split(n);
  const int nw = opts_.effective_workers();
  std::vector<detail::EndpointScratch> scratch(nw);
  for (auto& sc : scratch) {
    sc.vis.assign(ball_.size() + 1, 0);
    sc.vis[csr_.dummy] = 1;
    sc.acc.assign(ball_.size(), 0);
  }
  std::atomic<bool> dead{false};

  auto run_one = [&](detail::EndpointScratch& sc, std::uint32_t e, std::uint32_t u, int left,
                     std::uint64_t wgt) {
    detail::KernelCtx ctx{csr_.eslot.data(), &ball_, sc.vis.data(), csr_.fwd};
    std::uint64_t block = 1;
    const bool ok = weighted
                        ? detail::endpoint_go<true>(ctx, e, u, left, wgt, sc, gate, block)
                        : detail::endpoint_go<false>(ctx, e, u, left, wgt, sc, gate, block);
    if (!ok) dead.store(true, std::memory_order_relaxed);
  };

  if (split == 0) {
    auto& sc = scratch[0];
    sc.vis[0] = 1;
    for (std::uint32_t s = ball_.slots_begin(0); s < ball_.slots_end(0); ++s) {
      const auto w = ball_.slot_head(s);
      const std::uint64_t wf = weighted ? ball_.slot_mult(s) : 1;
      if (n == 1) {
        if (!sc.acc[w]) sc.touched.push_back(w);
        sc.acc[w] += wf;
      } else {
        run_one(sc, s, w, n - 1, wf);
      }
    }
    sc.vis[0] = 0;
  } else {
    auto& ps = prefixes(false, split);
    parallel_tasks(ps.tasks.size(), [&](std::size_t t, int w) {
      if (dead.load(std::memory_order_relaxed)) return;
      auto& task = ps.tasks[t];
      auto& sc = scratch[w];
      for (auto m : task.walk) sc.vis[m] = 1;
      sc.vis[task.endpoint] = 0;
      run_one(sc, task.edge, task.endpoint, n - split, task.weight);
      for (auto m : task.walk) sc.vis[m] = 0;
    });
  }
  spent_ += gate.drawn.load();
  if (dead.load()) throw budget_error("node-visit budget exceeded in endpoint counting");

  std::map<std::uint32_t, WideCount> merged;
  for (auto& sc : scratch)
    for (auto w : sc.touched)
      if (sc.acc[w]) merged[w].add(sc.acc[w]);
  for (auto& [idx, wc] : merged) out[ball_.id_of(idx)] = wc.total();
  return out;
}

inline BigInt Enumerator::extendable_count(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("extendable_count: n, m must be >= 0");
  prepare(n + m);
  const bool weighted = ball_.weighted();
  if (weighted) {
    const double bound = n * (std::log2(static_cast<double>(std::max(2, g_->degree))) +
                              std::log2(static_cast<double>(ball_.max_mult())));
    if (bound >= 60.0)
      throw budget_error("weighted extendable counts exceed the machine-word range");
  }
  detail::BudgetGate gate;
  gate.limit = opts_.node_budget > spent_ ? opts_.node_budget - spent_ : 0;
  std::atomic<bool> dead{false};

  const int nw = opts_.effective_workers();
  std::vector<std::vector<std::uint8_t>> wvis(nw);
  for (auto& v : wvis) {
    v.assign(ball_.size() + 1, 0);
    v[csr_.dummy] = 1;
  }
  std::vector<WideCount> acc(nw);

  if (n == 0) {
    // is the empty walk the initial segment of some m-step SAW?
    auto& vis = wvis[0];
    detail::KernelCtx ctx{csr_.eslot.data(), &ball_, vis.data(), csr_.fwd};
    bool found = m == 0;
    std::uint64_t block = 1;
    bool alive = true;
    vis[0] = 1;
    for (std::uint32_t s = ball_.slots_begin(0); !found && s < ball_.slots_end(0); ++s)
      found = detail::extend_ok(ctx, s, ball_.slot_head(s), m - 1, gate, block, alive);
    vis[0] = 0;
    spent_ += gate.drawn.load();
    if (!alive) throw budget_error("node-visit budget exceeded in extendable counting");
    return found ? 1 : 0;
  }

  const int split = pick_split(n);
  auto run_one = [&](int w, std::uint32_t e, std::uint32_t u, int left, std::uint64_t wgt) {
    detail::KernelCtx ctx{csr_.eslot.data(), &ball_, wvis[w].data(), csr_.fwd};
    std::uint64_t block = 1, local = 0;
    const bool ok = weighted ? detail::extendable_go<true>(ctx, e, u, left, m, wgt, local,
                                                           gate, block)
                             : detail::extendable_go<false>(ctx, e, u, left, m, wgt, local,
                                                            gate, block);
    acc[w].add(local);
    if (!ok) dead.store(true, std::memory_order_relaxed);
  };

  if (split == 0) {
    auto& vis = wvis[0];
    vis[0] = 1;
    for (std::uint32_t s = ball_.slots_begin(0); s < ball_.slots_end(0); ++s)
      run_one(0, s, ball_.slot_head(s), n - 1, weighted ? ball_.slot_mult(s) : 1);
    vis[0] = 0;
  } else {
    auto& ps = prefixes(false, split);
    parallel_tasks(ps.tasks.size(), [&](std::size_t t, int w) {
      if (dead.load(std::memory_order_relaxed)) return;
      auto& task = ps.tasks[t];
      for (auto mk : task.walk) wvis[w][mk] = 1;
      wvis[w][task.endpoint] = 0;
      run_one(w, task.edge, task.endpoint, n - split, task.weight);
      for (auto mk : task.walk) wvis[w][mk] = 0;
    });
  }
  spent_ += gate.drawn.load();
  if (dead.load()) throw budget_error("node-visit budget exceeded in extendable counting");
  BigInt total = 0;
  for (auto& a : acc) total += a.total();
  return total;
}

inline std::vector<std::vector<VertexId>> Enumerator::walks_at_ranks(
    int n, const std::vector<std::uint64_t>& ranks) {
  std::vector<std::vector<VertexId>> out(ranks.size());
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] < ranks[i - 1]) throw std::invalid_argument("ranks must be sorted");
  if (n == 0) {
    for (auto& w : out) w = {g_->root};
    return out;
  }
  std::vector<std::uint64_t> per_task;
  const std::uint64_t total = level_total_u64(n, &per_task);
  if (!ranks.empty() && ranks.back() >= total)
    throw std::invalid_argument("rank out of range");

  const int split = pick_split(n);
  struct Job {
    std::size_t task;     // index into prefix set (or 0 for root job)
    std::size_t lo, hi;   // rank slice
    std::uint64_t offset; // cumulative weighted count before this task
  };
  std::vector<Job> jobs;
  {
    std::uint64_t off = 0;
    std::size_t p = 0;
    for (std::size_t t = 0; t < per_task.size(); ++t) {
      const std::uint64_t end = off + per_task[t];
      const std::size_t lo = p;
      while (p < ranks.size() && ranks[p] < end) ++p;
      if (p > lo) jobs.push_back({t, lo, p, off});
      off = end;
    }
  }

  const int nw = opts_.effective_workers();
  std::vector<std::vector<std::uint8_t>> wvis(nw);
  for (auto& v : wvis) {
    v.assign(ball_.size() + 1, 0);
    v[csr_.dummy] = 1;
  }
  std::vector<std::vector<std::uint32_t>> raw(ranks.size());
  const bool weighted = ball_.weighted();

  parallel_tasks(jobs.size(), [&](std::size_t j, int w) {
    const Job& job = jobs[j];
    auto& vis = wvis[w];
    detail::KernelCtx ctx{csr_.eslot.data(), &ball_, vis.data(), csr_.fwd};
    detail::SweepState st;
    st.ranks = ranks.data();
    st.pos = job.lo;
    st.end = job.hi;
    st.cum = job.offset;
    st.out = &raw;
    st.out_base = 0;
    if (split == 0) {
      vis[0] = 1;
      st.path.push_back(0);
      bool done = false;
      for (std::uint32_t s = ball_.slots_begin(0); !done && s < ball_.slots_end(0); ++s) {
        const auto h = ball_.slot_head(s);
        const std::uint64_t wf = weighted ? ball_.slot_mult(s) : 1;
        done = weighted ? detail::sweep_go<true>(ctx, s, h, n - 1, wf, st)
                        : detail::sweep_go<false>(ctx, s, h, n - 1, wf, st);
      }
      st.path.pop_back();
      vis[0] = 0;
    } else {
      auto& task = saw_prefixes_->tasks[job.task];
      for (auto mk : task.walk) vis[mk] = 1;
      vis[task.endpoint] = 0;
      st.path.assign(task.walk.begin(), task.walk.end() - 1);
      weighted ? detail::sweep_go<true>(ctx, task.edge, task.endpoint, n - split, task.weight, st)
               : detail::sweep_go<false>(ctx, task.edge, task.endpoint, n - split, task.weight, st);
      for (auto mk : task.walk) vis[mk] = 0;
    }
  });

  for (std::size_t i = 0; i < ranks.size(); ++i) {
    out[i].reserve(raw[i].size());
    for (auto idx : raw[i]) out[i].push_back(ball_.id_of(idx));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free-function API
// ---------------------------------------------------------------------------

/// values[k] = number of k-step SAWs from the root, weighted by edge
/// multiplicities, for k = 0..n_max. Directed graphs follow edge directions.
inline CountSeries count_saws(const RootedGraph& g, int n_max, const EnumOptions& opts = {}) {
  Enumerator e(g, opts);
  return e.saw_series(n_max);
}

/// Endpoint-resolved exact counts; the map sums to count_saws(g, n).values[n].
inline std::map<VertexId, BigInt> count_saws_to(const RootedGraph& g, int n,
                                                const EnumOptions& opts = {}) {
  Enumerator e(g, opts);
  return e.endpoint_counts(n);
}

/// values[k] = number of k-step bridges under the graph's height function.
inline CountSeries count_bridges(const RootedGraph& g, int n_max,
                                 const EnumOptions& opts = {}) {
  Enumerator e(g, opts);
  return e.bridge_series(n_max);
}

/// Number of n-step SAWs that extend to an (n+m)-step SAW. Monotone
/// non-increasing in m; upper-bounds the forward-extendable count for every m.
inline BigInt count_extendable(const RootedGraph& g, int n, int m,
                               const EnumOptions& opts = {}) {
  Enumerator e(g, opts);
  return e.extendable_count(n, m);
}

/// Truncated SAW generating function: sum_{k<=n_max} sigma_k x^k. The full
/// series has radius of convergence 1/mu.
inline double generating_function_eval(const RootedGraph& g, double x, int n_max,
                                       const EnumOptions& opts = {}) {
  if (x < 0) throw std::invalid_argument("generating_function_eval: x must be >= 0");
  CountSeries s = count_saws(g, n_max, opts);
  if (s.truncated) throw budget_error("node-visit budget exceeded in generating function");
  double total = 0;
  for (int k = 0; k <= s.n_max(); ++k) {
    if (x == 0) {
      if (k == 0) total += 1;
      continue;
    }
    total += std::exp(log_big(s.values[k]) + k * std::log(x));
  }
  return total;
}

}  // namespace sawlab
