// Acceptance suite: runs every acceptance experiment end to end at its
// stated tolerance and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sawlab/sawlab.hpp"
#include "support/oracle.hpp"

using namespace sawlab;

namespace {

int g_failures = 0;

struct Check {
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> body;
};

void run(const Check& c) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = c.body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.time_limit_s > 0 && dt >= c.time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("time limit ") +
              std::to_string(c.time_limit_s) + "s exceeded";
  }
  std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), dt,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

}  // namespace

int main() {
  std::printf("sawlab acceptance suite (library %s)\n", version());

  run({"C1 exact-value table: ladder ratio(n=40, step=1) within 1e-3 of phi", 5.0,
       [](std::string& d) {
         const double r = ratio_estimate(make_ladder(), 40, 1);
         d = "ratio=" + fmt(r) + " phi=" + fmt(kPhi) + " err=" + fmt(std::abs(r - kPhi));
         return std::abs(r - kPhi) < 1e-3;
       }});

  run({"C2 bridge multigraph: bridge(4) ratio(n=30, step=2) within 1e-3 of sqrt(3)", 5.0,
       [](std::string& d) {
         const double r = ratio_estimate(make_bridge(4), 30, 2);
         d = "ratio=" + fmt(r) + " err=" + fmt(std::abs(r - std::sqrt(3.0)));
         return std::abs(r - std::sqrt(3.0)) < 1e-3;
       }});

  run({"C3 hexagonal: upper(n=24) >= sqrt(2+sqrt2), within 0.15; ratio(n=24,2) within 0.05",
       120.0, [](std::string& d) {
         const double mu = exact_value("hexagonal");
         auto mi = mu_interval(make_hexagonal(), 24);
         const double r = ratio_estimate(make_hexagonal(), 24, 2);
         d = "upper=" + fmt(mi.upper) + " ratio=" + fmt(r) + " exact=" + fmt(mu);
         return mi.upper >= mu - 1e-12 && mi.upper - mu < 0.15 && std::abs(r - mu) < 0.05;
       }});

  run({"C4 Z^2 sandwich at n=14 plus sub/supermultiplicativity, i+j <= 14", 120.0,
       [](std::string& d) {
         auto g = make_hypercubic(2);
         auto mi = mu_interval(g, 14);
         d = "interval=[" + fmt(mi.lower) + "," + fmt(mi.upper) + "]";
         bool ok = mi.lower <= 2.63815 && 2.63815 <= mi.upper && mi.upper <= 2.95;
         std::printf("  note: the rigorous window 2.6256 <= mu(Z^2) <= 2.6792 is NOT\n"
                     "  reproducible at desk scale; it needs specialized transfer-matrix\n"
                     "  machinery. This suite checks interval containment instead.\n");
         auto s = count_saws(g, 14);
         auto b = count_bridges(g, 14);
         for (int i = 1; i <= 13; ++i)
           for (int j = 1; i + j <= 14; ++j) {
             ok = ok && s.values[i + j] <= s.values[i] * s.values[j];
             ok = ok && b.values[i + j] >= b.values[i] * b.values[j];
           }
         return ok;
       }});

  run({"C5 Fisher fixed point and recursion envelope (k <= 10)", 1.0, [](std::string& d) {
         const double fp = fisher_mu_pull(kPhi);
         bool ok = std::abs(fp - kPhi) < 1e-10;
         d = "pull(phi)-phi=" + fmt(fp - kPhi);
         auto seq = fisher_iterate(2.0, 10);
         const double up = 2.0 / (7.0 - std::sqrt(5.0));
         for (int k = 1; k <= 10; ++k) {
           const double diff = 1.0 / seq[k] - 1.0 / kPhi;
           ok = ok && diff <= std::pow(up, k) && diff >= -std::pow(4.0 / 7.0, k);
         }
         return ok;
       }});

  run({"C6 semi-cubic example: solve(sqrt(2+sqrt2)) = 1.75056 +- 1e-4", 1.0,
       [](std::string& d) {
         const double mt = semicubic_solve(exact_value("hexagonal"));
         d = "mu-tilde=" + fmt(mt);
         return std::abs(mt - 1.75056) <= 1e-4;
       }});

  run({"C7 cross-solver agreement and free-product sharpness at n=24", 60.0,
       [](std::string& d) {
         const double y = girth_degree_upper(3, 3);
         const double p = fisher_mu_pull(2.0);
         const double r = ratio_estimate(make_free_product(3, 3), 24, 2);
         d = "girthbound=" + fmt(y) + " pull=" + fmt(p) + " ratio=" + fmt(r);
         return std::abs(y - p) < 1e-8 && std::abs(r - y) < 0.02;
       }});

  run({"C8 cubic lower bounds: 12^(1/6) to 1e-10; girth-3 residual < 1e-12", 5.0,
       [](std::string& d) {
         const double x4 = cubic_girth_lower(4);
         const double x3 = cubic_girth_lower(3);
         const double res = std::abs(1 / (x3 * x3) + 1 / (x3 * x3 * x3) - 1 / std::sqrt(2.0));
         d = "g4=" + fmt(x4) + " g3=" + fmt(x3) + " residual=" + fmt(res);
         return std::abs(x4 - std::pow(12.0, 1.0 / 6.0)) < 1e-10 && res < 1e-12;
       }});

  run({"C9 spectral bound sanity", 5.0, [](std::string& d) {
         const double lam3 = 1.0 - 2.0 * std::sqrt(2.0) / 3.0;
         const double b = spectral_lower(3, lam3);
         bool ok = b > 1.55 && b < 1.65 && b <= 2.0;
         for (int delta : {3, 4, 5, 6, 9})
           ok = ok && spectral_lower(delta, 0.0) == std::sqrt(double(delta - 1));
         d = "tree bound=" + fmt(b);
         return ok;
       }});

  run({"C10 locality trend: |mu(cyl_m) - mu(Z^2)| non-increasing, m=3..8, n=14", 300.0,
       [](std::string& d) {
         auto rows = locality_scan({3, 4, 5, 6, 7, 8}, 14);
         const double z2 = rows.back().mu_hat;
         bool ok = rows.back().m == 0;
         double prev = std::numeric_limits<double>::infinity();
         d = "gaps:";
         for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
           const double gap = std::abs(rows[i].mu_hat - z2);
           d += " " + fmt(gap);
           ok = ok && gap <= prev + 0.02;
           prev = gap;
         }
         return ok;
       }});

  run({"C11 sampler exactness: tree nu, Z^2 unranking bijectivity, speed probe", 60.0,
       [](std::string& d) {
         auto rows = displacement_stats(make_tree(3), {4, 8, 12, 16}, 100, 1);
         for (const auto& r : rows)
           if (!r.exact) {
             d = "exact mode not engaged";
             return false;
           }
         const double nu = nu_estimate(rows);
         bool ok = std::abs(nu - 1.0) <= 1e-6;
         d = "nu=" + fmt(nu);

         auto g = make_hypercubic(2);
         auto sigma = count_saws(g, 6);
         for (int n = 1; n <= 6 && ok; ++n) {
           const auto total = sigma.values[n].convert_to<std::uint64_t>();
           std::vector<std::uint64_t> ranks(total);
           for (std::uint64_t i = 0; i < total; ++i) ranks[i] = i;
           Enumerator e(g);
           auto walks = e.walks_at_ranks(n, ranks);
           std::set<std::vector<VertexId>> distinct;
           for (const auto& w : walks) {
             std::set<VertexId> verts(w.begin(), w.end());
             if (w.size() != static_cast<std::size_t>(n) + 1 || verts.size() != w.size())
               ok = false;
             distinct.insert(w);
           }
           if (distinct.size() != total) ok = false;
           d += " bij(n=" + std::to_string(n) + ")=" + std::to_string(distinct.size()) + "/" +
                std::to_string(total);
         }

         auto sp = speed_probe(make_tree(3), 12, 0.9, 200, 1);
         ok = ok && sp.frequency == 0.0;
         return ok;
       }});

  run({"C12 oracle equivalence (n <= 8) and parallel determinism (1/2/max workers)", 300.0,
       [](std::string& d) {
         std::vector<RootedGraph> graphs;
         graphs.push_back(make_hypercubic(2));
         graphs.push_back(make_ladder());
         graphs.push_back(make_hexagonal());
         graphs.push_back(make_bridge(3));
         graphs.push_back(quotient_cylinder(3));
         bool ok = true;
         for (const auto& g : graphs) {
           auto fast = count_saws(g, 8);
           auto slow = oracle::naive_series(g, 8);
           for (int n = 0; n <= 8; ++n)
             if (fast.values[n] != slow[n]) {
               ok = false;
               d += " mismatch on " + g.key() + " n=" + std::to_string(n);
             }
           EnumOptions one, two, many;
           one.workers = 1;
           two.workers = 2;
           many.workers = 0;  // hardware
           auto a = count_saws(g, 10, one);
           auto b = count_saws(g, 10, two);
           auto c = count_saws(g, 10, many);
           for (int n = 0; n <= 10; ++n)
             if (a.values[n] != b.values[n] || b.values[n] != c.values[n]) ok = false;
         }
         if (ok) d = "5 graphs, exact match";
         return ok;
       }});

  std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
