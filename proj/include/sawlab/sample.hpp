#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sawlab/enumerate.hpp"

namespace sawlab {

/// A sampled SAW: vertex sequence of length n+1 plus the graph distance
/// between its endpoints (measured inside the radius-n ball, which is exact
/// for walks from the root).
struct WalkSample {
  std::vector<VertexId> vertices;
  int n = 0;
  int displacement = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based stream: independent draws for each (seed, index) pair, so
/// sample i's rank does not depend on worker count or evaluation order.
inline std::uint64_t stream_origin(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
  return splitmix64(s);
}

/// Uniform draw in [0, total) by masked rejection.
inline std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t index,
                                   std::uint64_t total) {
  if (total <= 1) return 0;
  std::uint64_t state = stream_origin(seed, index);
  int bits = 64 - __builtin_clzll(total - 1);
  const std::uint64_t mask = bits >= 64 ? ~0ull : ((1ull << bits) - 1);
  for (;;) {
    const std::uint64_t v = splitmix64(state) & mask;
    if (v < total) return v;
  }
}

}  // namespace detail

/// Exactly uniform samples from the (multiplicity-weighted) uniform measure
/// on n-step SAWs, by unranking random positions of the deterministic
/// enumeration order. Reproducible given the seed; refuses (throws
/// budget_error) rather than falling back to approximate sampling.
inline std::vector<WalkSample> sample_uniform(const RootedGraph& g, int n, int count,
                                              std::uint64_t seed,
                                              const EnumOptions& opts = {}) {
  if (n < 0) throw std::invalid_argument("sample_uniform: n must be >= 0");
  if (count < 1) throw std::invalid_argument("sample_uniform: count must be >= 1");
  Enumerator e(g, opts);
  {
    CountSeries probe = e.saw_series(n);
    if (probe.n_max() < n)
      throw budget_error("sigma_n exceeds the enumeration budget: refusing to sample");
    if (probe.values[n] == 0) throw std::domain_error("no walks of the requested length");
  }
  const std::uint64_t total = e.level_total_u64(n);

  std::vector<std::uint64_t> ranks(count);
  for (int i = 0; i < count; ++i)
    ranks[i] = detail::uniform_below(seed, static_cast<std::uint64_t>(i), total);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ranks[a] < ranks[b]; });
  std::vector<std::uint64_t> sorted(count);
  for (int i = 0; i < count; ++i) sorted[i] = ranks[order[i]];

  auto walks = e.walks_at_ranks(n, sorted);
  std::vector<WalkSample> out(count);
  for (int i = 0; i < count; ++i) {
    WalkSample w;
    w.vertices = std::move(walks[i]);
    w.n = n;
    w.displacement = static_cast<int>(e.ball().dist(e.ball().index_of(w.vertices.back())));
    out[order[i]] = std::move(w);
  }
  return out;
}

struct DisplacementRow {
  int n = 0;
  double mean_sq = 0.0;
  double std_error = 0.0;
  std::int64_t count = 0;  // samples used; for exact mode, the number of walks
  bool exact = false;
};

inline constexpr std::int64_t kExactModeLimit = 10'000'000;

/// Mean squared endpoint displacement per walk length. Uses exact full
/// enumeration when sigma_n <= 1e7, Monte-Carlo sampling otherwise.
inline std::vector<DisplacementRow> displacement_stats(const RootedGraph& g,
                                                       const std::vector<int>& ns, int count,
                                                       std::uint64_t seed,
                                                       const EnumOptions& opts = {}) {
  std::vector<DisplacementRow> rows;
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("displacement_stats: n must be >= 1");
    DisplacementRow row;
    row.n = n;
    Enumerator e(g, opts);
    CountSeries s = e.saw_series(n);
    if (s.n_max() < n) throw budget_error("sigma_n exceeds the enumeration budget");
    const BigInt sigma = s.values[n];
    if (sigma <= kExactModeLimit) {
      auto ep = e.endpoint_counts(n);
      double num = 0, den = 0;
      for (const auto& [v, cnt] : ep) {
        const double c = cnt.convert_to<double>();
        const double d = static_cast<double>(e.ball().dist(e.ball().index_of(v)));
        num += c * d * d;
        den += c;
      }
      row.mean_sq = num / den;
      row.std_error = 0.0;
      row.count = static_cast<std::int64_t>(den);
      row.exact = true;
    } else {
      // derive a per-length stream so each row is independently reproducible
      const std::uint64_t row_seed = seed ^ (0xD1342543DE82EF95ull * (n + 1));
      auto samples = sample_uniform(g, n, count, row_seed, opts);
      double mean = 0, m2 = 0;
      std::int64_t k = 0;
      for (const auto& w : samples) {
        const double d2 = static_cast<double>(w.displacement) * w.displacement;
        ++k;
        const double delta = d2 - mean;
        mean += delta / k;
        m2 += delta * (d2 - mean);
      }
      row.mean_sq = mean;
      row.std_error = k > 1 ? std::sqrt(m2 / (k - 1) / k) : 0.0;
      row.count = k;
      row.exact = false;
    }
    rows.push_back(row);
  }
  return rows;
}

/// Least-squares slope of log E||pi_n||^2 against log n, divided by 2.
inline double nu_estimate(const std::vector<DisplacementRow>& table) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : table)
    if (r.n >= 1 && r.mean_sq > 0) pts.push_back({std::log(r.n), std::log(r.mean_sq)});
  if (pts.size() < 4) throw std::invalid_argument("nu_estimate: need at least 4 usable points");
  auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
  if (mx->first - mn->first < std::log(2.0) - 1e-12)
    throw std::invalid_argument("nu_estimate: walk lengths must span a factor of 2");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(pts.size());
  const double denom = k * sxx - sx * sx;
  if (denom <= 0) throw std::invalid_argument("nu_estimate: degenerate table");
  return (k * sxy - sx * sy) / denom / 2.0;
}

struct SpeedProbe {
  double frequency = 0.0;
  double half_width = 0.0;
  int count = 0;
  double c = 0.0;
};

/// Empirical frequency of {||pi_n|| <= c n} with a normal-approximation
/// binomial confidence half-width.
inline SpeedProbe speed_probe(const RootedGraph& g, int n, double c, int count,
                              std::uint64_t seed, const EnumOptions& opts = {}) {
  if (c <= 0) throw std::invalid_argument("speed_probe: c must be > 0");
  if (n < 1) throw std::invalid_argument("speed_probe: n must be >= 1");
  auto samples = sample_uniform(g, n, count, seed, opts);
  int hits = 0;
  for (const auto& w : samples)
    if (w.displacement <= c * n) ++hits;
  SpeedProbe p;
  p.count = count;
  p.c = c;
  p.frequency = static_cast<double>(hits) / count;
  p.half_width = 1.96 * std::sqrt(p.frequency * (1 - p.frequency) / count);
  return p;
}

}  // namespace sawlab
