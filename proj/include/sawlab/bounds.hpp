#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sawlab/cache.hpp"
#include "sawlab/enumerate.hpp"
#include "sawlab/solve.hpp"
#include "sawlab/transforms.hpp"

namespace sawlab {

enum class Rigor : std::uint8_t { certified, heuristic };

inline const char* to_string(Rigor r) {
  return r == Rigor::certified ? "certified" : "heuristic";
}

/// Two-sided bound on the connective constant with per-endpoint rigor flags.
/// The upper endpoint sigma_n^(1/n) is certified only on transitive graphs
/// (Fekete: mu = inf sigma_n^(1/n) under submultiplicativity). The lower
/// endpoint b_n^(1/n) is certified only where supermultiplicativity of
/// bridges is known outright: the hypercubic and ladder families.
struct MuInterval {
  double lower = 1.0;
  double upper = 0.0;
  Rigor lower_rigor = Rigor::heuristic;
  Rigor upper_rigor = Rigor::heuristic;
  int n_used = 0;
  std::string notes;
};

/// Known exact connective constants.
inline double exact_value(const std::string& family, int param = 0) {
  if (family == "ladder") return 0.5 * (1.0 + std::sqrt(5.0));
  if (family == "hexagonal") return std::sqrt(2.0 + std::sqrt(2.0));
  if (family == "bridge") {
    if (param < 2) throw std::invalid_argument("bridge: degree must be >= 2");
    return std::sqrt(static_cast<double>(param - 1));
  }
  if (family == "tree") {
    if (param < 2) throw std::invalid_argument("tree: degree must be >= 2");
    return static_cast<double>(param - 1);
  }
  throw std::invalid_argument("no exact connective constant known for " + family);
}

inline MuInterval mu_interval(const RootedGraph& g, int n, SeriesCache* cache = nullptr,
                              const EnumOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("mu_interval: n must be >= 1");
  MuInterval mi;
  mi.n_used = n;
  CountSeries saw = ensure_series(g, SeriesKind::saw, n, cache, opts);
  if (saw.n_max() < n) throw budget_error("node-visit budget exceeded computing sigma series");
  mi.upper = nth_root(saw.values[n], n);
  mi.upper_rigor = g.transitive_class == TransitiveClass::transitive ? Rigor::certified
                                                                     : Rigor::heuristic;
  if (g.height) {
    CountSeries br = ensure_series(g, SeriesKind::bridge, n, cache, opts);
    if (br.n_max() < n) throw budget_error("node-visit budget exceeded computing bridge series");
    mi.lower = br.values[n] > 0 ? nth_root(br.values[n], n) : 1.0;
    const bool certified_family = g.family_name == "hypercubic" || g.family_name == "ladder";
    mi.lower_rigor = g.height->rigor == HeightRigor::transitive_certified && certified_family
                         ? Rigor::certified
                         : Rigor::heuristic;
    mi.notes = "sandwich b_n^{1/n} <= mu <= sigma_n^{1/n}";
  } else {
    mi.lower = 1.0;
    mi.lower_rigor = Rigor::heuristic;
    mi.notes = "no height function: trivial lower bound";
  }
  return mi;
}

/// (sigma_{n+step} / sigma_n)^(1/step): a non-rigorous point estimate of mu.
inline double ratio_estimate(const RootedGraph& g, int n, int step,
                             SeriesCache* cache = nullptr, const EnumOptions& opts = {}) {
  if (step != 1 && step != 2) throw std::invalid_argument("ratio_estimate: step must be 1 or 2");
  if (n < 0) throw std::invalid_argument("ratio_estimate: n must be >= 0");
  CountSeries s = ensure_series(g, SeriesKind::saw, n + step, cache, opts);
  if (s.n_max() < n + step)
    throw budget_error("node-visit budget exceeded computing sigma series");
  if (s.values[n] == 0) throw std::domain_error("ratio_estimate: sigma_n = 0");
  return std::exp((log_big(s.values[n + step]) - log_big(s.values[n])) / step);
}

/// Smallest-root upper bound on mu for transitive simple graphs of degree
/// delta and girth g: solves
///   (delta-2) * M1/(1+M1) + M2/(1+M2) = 1,  M1 = z, M2 = 2(z+...+z^{g-1}),
/// and returns y = 1/z. Sharp, attained by the free product graph.
inline double girth_degree_upper(int delta, int g) {
  if (delta < 3 || g < 3) throw std::invalid_argument("girth_degree_upper: delta, g >= 3");
  auto lhs = [delta, g](double z) {
    double m2 = 0, zp = 1;
    for (int k = 1; k <= g - 1; ++k) {
      zp *= z;
      m2 += zp;
    }
    m2 *= 2;
    return (delta - 2) * (z / (1 + z)) + m2 / (1 + m2);
  };
  const double z = bisect(lhs, 1e-9, 1.0 - 1e-12, 1.0);
  return 1.0 / z;
}

/// Lower bounds for transitive cubic graphs of girth 3 and 4.
inline double cubic_girth_lower(int g) {
  if (g == 3) {
    auto f = [](double x) { return 1.0 / (x * x) + 1.0 / (x * x * x); };
    return bisect(f, 1.0, 2.0, 1.0 / std::sqrt(2.0));
  }
  if (g == 4) return std::pow(12.0, 1.0 / 6.0);
  throw std::invalid_argument("cubic_girth_lower: g must be 3 or 4");
}

/// mu >= (delta-1)^{(1+c*lambda)/2} with c = delta(delta-1)/(delta-2)^2,
/// lambda the spectral bottom of I - P for simple random walk.
inline double spectral_lower(int delta, double lambda) {
  if (delta < 3) throw std::invalid_argument("spectral_lower: delta must be >= 3");
  if (lambda < 0 || lambda > 1) throw std::invalid_argument("spectral_lower: lambda in [0,1]");
  if (lambda == 0) return std::sqrt(static_cast<double>(delta - 1));
  const double c = static_cast<double>(delta) * (delta - 1) /
                   (static_cast<double>(delta - 2) * (delta - 2));
  return std::pow(static_cast<double>(delta - 1), 0.5 * (1.0 + c * lambda));
}

/// lambda-hat = 1 - p_{2n}(root,root)^{1/2n} from exact dynamic programming
/// of simple-random-walk return probabilities on the radius-n ball (mass
/// that strays beyond distance n cannot return in time, so the truncation is
/// exact). The finite-n value under-estimates rho, so lambda-hat
/// over-estimates lambda and bounds built from it are heuristic.
inline double estimate_lambda(const RootedGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("estimate_lambda: n must be >= 1");
  BallIndex ball(g);
  ball.ensure_radius(n + 1);
  const auto nv = ball.size();
  std::vector<double> p(nv, 0.0), q(nv, 0.0);
  p[0] = 1.0;
  for (int step = 0; step < 2 * n; ++step) {
    std::fill(q.begin(), q.end(), 0.0);
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (p[v] == 0.0 || !ball.is_expanded(v)) continue;
      double deg = 0;
      for (std::uint32_t s = ball.slots_begin(v); s < ball.slots_end(v); ++s)
        deg += ball.slot_mult(s);
      const double share = p[v] / deg;
      for (std::uint32_t s = ball.slots_begin(v); s < ball.slots_end(v); ++s) {
        const auto w = ball.slot_head(s);
        if (ball.dist(w) <= static_cast<std::uint32_t>(n))
          q[w] += share * ball.slot_mult(s);
      }
    }
    std::swap(p, q);
  }
  const double ret = p[0];
  if (ret <= 0) return 1.0;
  return 1.0 - std::pow(ret, 1.0 / (2.0 * n));
}

/// mu of the Fisher transform of a graph with connective constant mu:
/// solves g(x) = x^2 + x^3 = 1/mu on (0,1) and returns 1/x.
inline double fisher_mu_pull(double mu) {
  if (mu <= 1) throw std::invalid_argument("fisher_mu_pull: mu must be > 1");
  auto gfun = [](double x) { return x * x + x * x * x; };
  const double x = bisect(gfun, 1e-12, 1.0, 1.0 / mu);
  return 1.0 / x;
}

/// Inverse of fisher_mu_pull: mu of the graph whose Fisher transform has
/// connective constant mu. Closed form 1/g(1/mu) = mu^3/(mu+1).
inline double fisher_mu_push(double mu) {
  if (mu <= 1) throw std::invalid_argument("fisher_mu_push: mu must be > 1");
  return mu * mu * mu / (mu + 1.0);
}

/// Iterated Fisher recursion mu_0, mu_1, ..., mu_k; converges monotonely to
/// the golden mean.
inline std::vector<double> fisher_iterate(double mu0, int k) {
  if (mu0 <= 1) throw std::invalid_argument("fisher_iterate: mu0 must be > 1");
  if (k < 1) throw std::invalid_argument("fisher_iterate: k must be >= 1");
  std::vector<double> seq{mu0};
  for (int i = 0; i < k; ++i) seq.push_back(fisher_mu_pull(seq.back()));
  return seq;
}

/// Semi-cubic Fisher relation: solves h(x) = x^3 + x^4 = 1/mu^2 on (0,1)
/// and returns mu-tilde = 1/x.
inline double semicubic_solve(double mu) {
  if (mu <= 1) throw std::invalid_argument("semicubic_solve: mu must be > 1");
  auto h = [](double x) { return x * x * x + x * x * x * x; };
  const double x = bisect(h, 1e-12, 1.0, 1.0 / (mu * mu));
  return 1.0 / x;
}

struct LocalityRow {
  int m = 0;  // 0 marks the full-plane reference row
  double mu_hat = 0.0;
};

/// Ratio estimates on the cylinder quotients for each m, with the square
/// lattice estimate appended (m = 0) for comparison.
inline std::vector<LocalityRow> locality_scan(const std::vector<int>& ms, int n,
                                              SeriesCache* cache = nullptr,
                                              const EnumOptions& opts = {}) {
  std::vector<LocalityRow> rows;
  for (int m : ms) {
    RootedGraph cyl = quotient_cylinder(m);
    rows.push_back({m, ratio_estimate(cyl, n, 2, cache, opts)});
  }
  RootedGraph z2 = make_hypercubic(2);
  rows.push_back({0, ratio_estimate(z2, n, 2, cache, opts)});
  return rows;
}

/// Running minimum of sigma_k^{1/k}: the non-increasing certified upper
/// envelope on transitive graphs.
inline double mu_upper_envelope(const CountSeries& s, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n && k <= s.n_max(); ++k)
    best = std::min(best, nth_root(s.values[k], k));
  return best;
}

// --- fixed-format emission (CSV columns are part of the tool contract) ---

inline std::string format_sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string to_csv_row(const std::string& graph_key, const std::string& method,
                              const MuInterval& mi) {
  std::ostringstream os;
  os << '"' << graph_key << "\"," << method << ',' << mi.n_used << ','
     << format_sig10(mi.lower) << ',' << format_sig10(mi.upper) << ','
     << to_string(mi.lower_rigor) << ',' << to_string(mi.upper_rigor);
  return os.str();
}

inline json to_json_report(const std::string& graph_key, const std::string& method,
                           const MuInterval& mi) {
  return json{{"graph_key", graph_key},
              {"method", method},
              {"n", mi.n_used},
              {"lower", mi.lower},
              {"upper", mi.upper},
              {"rigor_lower", to_string(mi.lower_rigor)},
              {"rigor_upper", to_string(mi.upper_rigor)},
              {"notes", mi.notes}};
}

}  // namespace sawlab
