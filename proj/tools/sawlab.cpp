// sawlab: enumerate self-avoiding walks and bridges on neighbor-rule graphs
// and compute bounds and estimates for their connective constants.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sawlab/sawlab.hpp"

namespace {

using namespace sawlab;

struct GraphArgs {
  std::string family;
  int dim = 2;
  int degree = 3;
  int girth = 3;
  int m = 3;
  std::vector<std::string> transforms;

  RootedGraph build() const {
    RootedGraph g;
    if (family == "cylinder") {
      g = quotient_cylinder(m);
    } else if (family == "hypercubic") {
      g = make_hypercubic(dim);
    } else if (family == "tree") {
      g = make_tree(degree);
    } else if (family == "bridge") {
      g = make_bridge(degree);
    } else if (family == "free-product") {
      g = make_free_product(degree, girth);
    } else {
      g = make_family(family);
    }
    for (const auto& t : transforms) {
      if (t == "fisher") {
        g = fisher_transform(g);
      } else if (t == "semicubic") {
        if (g.family_name != "hexagonal")
          throw std::invalid_argument("--transform semicubic is built in for the hexagonal lattice only");
        g = fisher_semicubic_hexagonal();
      } else {
        throw std::invalid_argument("unknown transform: " + t);
      }
    }
    return g;
  }
};

struct RunArgs {
  int workers = 0;
  std::uint64_t budget = 5'000'000'000ull;
  int split = 4;
  std::string format = "csv";
  std::string cache_path;
  bool no_cache = false;

  EnumOptions enum_options() const {
    EnumOptions o;
    o.workers = workers;
    o.node_budget = budget;
    o.split_depth = split;
    return o;
  }

  std::filesystem::path resolved_cache() const {
    if (!cache_path.empty()) return cache_path;
    const char* dir = std::getenv("SAWLAB_CACHE_DIR");
    return std::filesystem::path(dir ? dir : ".") / "sawlab_cache.jsonl";
  }

  std::unique_ptr<SeriesCache> open_cache() const {
    if (no_cache) return nullptr;
    return std::make_unique<SeriesCache>(resolved_cache());
  }

  bool json() const { return format == "json"; }
};

void add_graph_opts(CLI::App* cmd, GraphArgs& ga, bool required = true) {
  auto* f = cmd->add_option("--family", ga.family,
                            "graph family (hypercubic, ladder, hexagonal, triangular, "
                            "square-octagon, tree, bridge, free-product, cylinder)");
  if (required) f->required();
  cmd->add_option("--dim", ga.dim, "dimension for hypercubic");
  cmd->add_option("--degree", ga.degree, "degree for tree/bridge/free-product");
  cmd->add_option("--girth", ga.girth, "cycle length for free-product");
  cmd->add_option("--m", ga.m, "circumference for cylinder quotients");
  cmd->add_option("--transform", ga.transforms,
                  "apply a transform (fisher, semicubic); repeatable, applied in order");
}

void add_run_opts(CLI::App* cmd, RunArgs& ra) {
  cmd->add_option("--workers", ra.workers, "worker threads (0 = hardware)");
  cmd->add_option("--budget", ra.budget, "node-visit budget");
  cmd->add_option("--split", ra.split, "parallel prefix depth");
  cmd->add_option("--format", ra.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", ra.cache_path, "cache file path");
  cmd->add_flag("--no-cache", ra.no_cache, "disable the series cache");
}

void echo_config(const json& config) {
  json j{{"version", version()}, {"config", config}};
  std::cerr << j.dump() << '\n';
}

json merged(json a, const json& b) {
  a.update(b);
  return a;
}

json graph_config(const GraphArgs& ga, const RootedGraph& g) {
  return json{{"graph", json::parse(g.key())}, {"family_arg", ga.family}};
}

int emit_error(const std::string& kind, const std::string& what, int code) {
  json e{{"error", what}, {"kind", kind}};
  std::cerr << e.dump() << '\n';
  return code;
}

std::string walk_string(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += vs[i].str();
  }
  return s;
}

// ------------------------- subcommand bodies ------------------------------

int cmd_families(bool as_json) {
  struct Row {
    const char* family;
    const char* params;
    const char* degree;
    const char* girth;
    const char* exact;
  };
  const Row rows[] = {
      {"hypercubic", "dim>=1", "2*dim", "4 (dim>=2)", ""},
      {"ladder", "", "3", "4", "1.618033989"},
      {"hexagonal", "", "3", "6", "1.847759065"},
      {"triangular", "", "6", "3", ""},
      {"square-octagon", "", "3", "4", ""},
      {"tree", "degree>=2", "degree", "-", "degree-1"},
      {"bridge", "degree>=2", "degree", "-", "sqrt(degree-1)"},
      {"free-product", "degree>=3, girth>=3", "degree", "girth", ""},
      {"cylinder", "m>=2 (directed quotient)", "4", "-", ""},
  };
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"family", r.family},
                     {"params", r.params},
                     {"degree", r.degree},
                     {"girth", r.girth},
                     {"exact_mu", r.exact}});
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "family,params,degree,girth,exact_mu\n";
    for (const auto& r : rows)
      std::cout << r.family << ',' << r.params << ',' << r.degree << ',' << r.girth << ','
                << r.exact << '\n';
  }
  return 0;
}

int cmd_series(const GraphArgs& ga, const RunArgs& ra, int n, bool bridges) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g), json{{"command", bridges ? "bridges" : "count"},
                                              {"n", n},
                                              {"workers", ra.workers},
                                              {"budget", ra.budget}}));
  auto cache = ra.open_cache();
  CountSeries s = ensure_series(g, bridges ? SeriesKind::bridge : SeriesKind::saw, n,
                                cache.get(), ra.enum_options());
  if (ra.json()) {
    json out{{"graph_key", json::parse(g.key())},
             {"kind", to_string(s.kind)},
             {"truncated", s.truncated || s.n_max() < n}};
    json vals = json::array();
    for (const auto& v : s.values) vals.push_back(to_decimal(v));
    out["values"] = vals;
    if (s.rigor) out["rigor"] = s.rigor == HeightRigor::transitive_certified
                                    ? "transitive-certified"
                                    : "heuristic";
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n," << (bridges ? "b_n" : "sigma_n") << '\n';
    for (int k = 0; k <= s.n_max(); ++k)
      std::cout << k << ',' << to_decimal(s.values[k]) << '\n';
  }
  if (s.truncated || s.n_max() < n)
    return emit_error("budget", "series truncated by node-visit budget", 3);
  return 0;
}

int cmd_interval(const GraphArgs& ga, const RunArgs& ra, int n) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g),
      json{{"command", "interval"}, {"n", n}, {"workers", ra.workers}, {"budget", ra.budget}}));
  auto cache = ra.open_cache();
  MuInterval mi = mu_interval(g, n, cache.get(), ra.enum_options());
  if (ra.json())
    std::cout << to_json_report(g.key(), "sandwich", mi).dump(2) << '\n';
  else {
    std::cout << "graph_key,method,n,lower,upper,rigor_lower,rigor_upper\n";
    std::cout << to_csv_row(g.key(), "sandwich", mi) << '\n';
  }
  return 0;
}

int cmd_ratio(const GraphArgs& ga, const RunArgs& ra, int n, int step) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g), json{
      {"command", "ratio"}, {"n", n}, {"step", step}, {"workers", ra.workers}}));
  auto cache = ra.open_cache();
  const double v = ratio_estimate(g, n, step, cache.get(), ra.enum_options());
  MuInterval mi;
  mi.lower = mi.upper = v;
  mi.n_used = n;
  mi.notes = "ratio estimate, step " + std::to_string(step);
  if (ra.json())
    std::cout << to_json_report(g.key(), "ratio", mi).dump(2) << '\n';
  else {
    std::cout << "graph_key,method,n,lower,upper,rigor_lower,rigor_upper\n";
    std::cout << to_csv_row(g.key(), "ratio", mi) << '\n';
  }
  return 0;
}

int cmd_fisher(const RunArgs& ra, std::optional<double> pull, std::optional<double> push,
               std::optional<double> iterate, int k, std::optional<double> semicubic) {
  echo_config(json{{"command", "fisher"}});
  json out = json::object();
  std::string csv;
  if (pull) {
    const double v = fisher_mu_pull(*pull);
    out["pull"] = v;
    csv += "pull," + format_sig10(v) + "\n";
  }
  if (push) {
    const double v = fisher_mu_push(*push);
    out["push"] = v;
    csv += "push," + format_sig10(v) + "\n";
  }
  if (semicubic) {
    const double v = semicubic_solve(*semicubic);
    out["semicubic"] = v;
    csv += "semicubic," + format_sig10(v) + "\n";
  }
  if (iterate) {
    auto seq = fisher_iterate(*iterate, k);
    out["iterate"] = seq;
    for (std::size_t i = 0; i < seq.size(); ++i)
      csv += "iterate " + std::to_string(i) + "," + format_sig10(seq[i]) + "\n";
  }
  if (out.empty())
    throw CLI::ValidationError("fisher", "one of --pull/--push/--iterate/--semicubic required");
  if (ra.json())
    std::cout << out.dump(2) << '\n';
  else
    std::cout << "operation,value\n" << csv;
  return 0;
}

int cmd_girthbound(const RunArgs& ra, int delta, int g) {
  echo_config(json{{"command", "girthbound"}, {"delta", delta}, {"girth", g}});
  const double v = girth_degree_upper(delta, g);
  if (ra.json())
    std::cout << json{{"delta", delta}, {"girth", g}, {"upper", v}}.dump(2) << '\n';
  else
    std::cout << "delta,girth,upper\n"
              << delta << ',' << g << ',' << format_sig10(v) << '\n';
  return 0;
}

int cmd_cubiclower(const RunArgs& ra, int g) {
  echo_config(json{{"command", "cubiclower"}, {"girth", g}});
  const double v = cubic_girth_lower(g);
  if (ra.json())
    std::cout << json{{"girth", g}, {"lower", v}}.dump(2) << '\n';
  else
    std::cout << "girth,lower\n" << g << ',' << format_sig10(v) << '\n';
  return 0;
}

int cmd_spectral(const GraphArgs& ga, const RunArgs& ra, std::optional<double> lambda,
                 std::optional<int> delta, int n) {
  double lam;
  int deg;
  json cfg{{"command", "spectral"}, {"n", n}};
  if (lambda) {
    lam = *lambda;
    if (!delta) throw CLI::ValidationError("spectral", "--delta required with --lambda");
    deg = *delta;
    echo_config(cfg);
  } else {
    if (ga.family.empty())
      throw CLI::ValidationError("spectral", "either --lambda/--delta or --family required");
    RootedGraph g = ga.build();
    cfg.update(graph_config(ga, g));
    echo_config(cfg);
    lam = estimate_lambda(g, n);
    deg = delta ? *delta : g.degree;
  }
  const double bound = spectral_lower(deg, std::min(1.0, std::max(0.0, lam)));
  if (ra.json())
    std::cout << json{{"delta", deg}, {"lambda", lam}, {"lower", bound},
                      {"rigor", lambda ? "certified-if-lambda-exact" : "heuristic"}}
                     .dump(2)
              << '\n';
  else
    std::cout << "delta,lambda,lower,rigor\n"
              << deg << ',' << format_sig10(lam) << ',' << format_sig10(bound) << ','
              << (lambda ? "certified-if-lambda-exact" : "heuristic") << '\n';
  return 0;
}

int cmd_locality(const RunArgs& ra, const std::vector<int>& ms, int n) {
  echo_config(json{{"command", "locality"}, {"m", ms}, {"n", n}});
  auto cache = ra.open_cache();
  auto rows = locality_scan(ms, n, cache.get(), ra.enum_options());
  if (ra.json()) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"m", r.m}, {"mu_hat", r.mu_hat},
                     {"graph", r.m == 0 ? "hypercubic(2)" : "cylinder"}});
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "m,mu_hat\n";
    for (const auto& r : rows)
      std::cout << (r.m == 0 ? std::string("Z2") : std::to_string(r.m)) << ','
                << format_sig10(r.mu_hat) << '\n';
  }
  return 0;
}

int cmd_sample(const GraphArgs& ga, const RunArgs& ra, int n, int count, std::uint64_t seed) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g), json{
      {"command", "sample"}, {"n", n}, {"count", count}, {"seed", seed}}));
  auto samples = sample_uniform(g, n, count, seed, ra.enum_options());
  if (ra.json()) {
    json out = json::array();
    for (const auto& s : samples) {
      json w = json::array();
      for (const auto& v : s.vertices) w.push_back(v.key);
      out.push_back({{"n", s.n}, {"displacement", s.displacement}, {"walk", w}});
    }
    std::cout << json{{"seed", seed}, {"samples", out}}.dump(2) << '\n';
  } else {
    std::cout << "index,n,displacement,walk\n";
    for (std::size_t i = 0; i < samples.size(); ++i)
      std::cout << i << ',' << samples[i].n << ',' << samples[i].displacement << ",\""
                << walk_string(samples[i].vertices) << "\"\n";
  }
  return 0;
}

int cmd_nu(const GraphArgs& ga, const RunArgs& ra, const std::vector<int>& ns, int count,
           std::uint64_t seed) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g), json{
      {"command", "nu"}, {"n", ns}, {"count", count}, {"seed", seed}}));
  auto rows = displacement_stats(g, ns, count, seed, ra.enum_options());
  const double nu = nu_estimate(rows);
  if (ra.json()) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n}, {"mean_sq_displacement", r.mean_sq},
                     {"stderr", r.std_error}, {"count", r.count}, {"exact", r.exact}});
    std::cout << json{{"rows", out}, {"nu", nu}, {"seed", seed}}.dump(2) << '\n';
  } else {
    std::cout << "n,mean_sq_displacement,stderr,count,seed\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << format_sig10(r.mean_sq) << ',' << format_sig10(r.std_error)
                << ',' << r.count << ',' << seed << '\n';
    std::cout << "nu," << format_sig10(nu) << ",,,\n";
  }
  return 0;
}

int cmd_speed(const GraphArgs& ga, const RunArgs& ra, int n, double c, int count,
              std::uint64_t seed) {
  RootedGraph g = ga.build();
  echo_config(merged(graph_config(ga, g), json{
      {"command", "speed"}, {"n", n}, {"c", c}, {"count", count}, {"seed", seed}}));
  auto p = speed_probe(g, n, c, count, seed, ra.enum_options());
  if (ra.json())
    std::cout << json{{"n", n}, {"c", c}, {"frequency", p.frequency},
                      {"half_width", p.half_width}, {"count", p.count}}
                     .dump(2)
              << '\n';
  else
    std::cout << "n,c,frequency,half_width,count\n"
              << n << ',' << format_sig10(c) << ',' << format_sig10(p.frequency) << ','
              << format_sig10(p.half_width) << ',' << p.count << '\n';
  return 0;
}

// ------------------------------ reports -----------------------------------

int cmd_report(const RunArgs& ra, const std::string& name) {
  echo_config(json{{"command", "report"}, {"name", name}});
  auto cache = ra.open_cache();
  auto opts = ra.enum_options();
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  std::ostringstream os;
  os.setf(std::ios::fmtflags(0));

  auto line = [&os](const std::string& quantity, const std::string& value) {
    os << quantity << ',' << value << '\n';
  };
  auto num = [&line](const std::string& q, double v) { line(q, format_sig10(v)); };

  bool known = true;
  if (name == "ladder" || name == "all") {
    const double r = ratio_estimate(make_ladder(), 40, 1, cache.get(), opts);
    num("ladder ratio_estimate(n=40 step=1)", r);
    num("golden mean", phi);
    num("abs error", std::abs(r - phi));
  }
  if (name == "bridge" || name == "all") {
    const double r = ratio_estimate(make_bridge(4), 30, 2, cache.get(), opts);
    num("bridge(4) ratio_estimate(n=30 step=2)", r);
    num("sqrt(3)", std::sqrt(3.0));
    num("abs error", std::abs(r - std::sqrt(3.0)));
  }
  if (name == "hexagonal" || name == "all") {
    MuInterval mi = mu_interval(make_hexagonal(), 24, cache.get(), opts);
    num("hexagonal upper (n=24)", mi.upper);
    num("hexagonal lower (n=24)", mi.lower);
    const double r = ratio_estimate(make_hexagonal(), 24, 2, cache.get(), opts);
    num("hexagonal ratio_estimate(n=24 step=2)", r);
    num("exact sqrt(2+sqrt(2))", exact_value("hexagonal"));
  }
  if (name == "z2" || name == "all") {
    MuInterval mi = mu_interval(make_hypercubic(2), 14, cache.get(), opts);
    os << "graph_key,method,n,lower,upper,rigor_lower,rigor_upper\n";
    os << to_csv_row(make_hypercubic(2).key(), "sandwich", mi) << '\n';
    line("reference point estimate", "2.63815");
    line("note", "the rigorous window 2.6256-2.6792 needs transfer-matrix machinery; "
                 "desk-scale enumeration cannot reproduce it");
  }
  if (name == "fisher" || name == "all") {
    num("pull(phi) - phi", fisher_mu_pull(phi) - phi);
    auto seq = fisher_iterate(2.0, 10);
    for (std::size_t k = 0; k < seq.size(); ++k)
      num("mu_" + std::to_string(k), seq[k]);
  }
  if (name == "semicubic" || name == "all") {
    num("semicubic_solve(sqrt(2+sqrt(2)))", semicubic_solve(exact_value("hexagonal")));
    line("reference", "1.75056");
    const double r = ratio_estimate(fisher_semicubic_hexagonal(), 24, 2, cache.get(), opts);
    num("semicubic hexagonal ratio_estimate(n=24 step=2)", r);
  }
  if (name == "cross-solver" || name == "all") {
    const double y = girth_degree_upper(3, 3);
    const double p = fisher_mu_pull(2.0);
    num("girth_degree_upper(3,3)", y);
    num("fisher_mu_pull(2)", p);
    num("abs difference", std::abs(y - p));
    const double r = ratio_estimate(make_free_product(3, 3), 24, 2, cache.get(), opts);
    num("free-product(3,3) ratio_estimate(n=24 step=2)", r);
  }
  if (name == "cubic-lower" || name == "all") {
    const double x = cubic_girth_lower(3);
    num("cubic_girth_lower(3)", x);
    num("residual", std::abs(1 / (x * x) + 1 / (x * x * x) - 1 / std::sqrt(2.0)));
    num("cubic_girth_lower(4)", cubic_girth_lower(4));
    num("12^(1/6)", std::pow(12.0, 1.0 / 6.0));
  }
  if (name == "spectral" || name == "all") {
    num("spectral_lower(3,0)", spectral_lower(3, 0.0));
    const double lam3 = 1.0 - 2.0 * std::sqrt(2.0) / 3.0;
    num("tree(3) exact lambda", lam3);
    num("spectral_lower(3, lambda)", spectral_lower(3, lam3));
    num("estimate_lambda(Z2, 12)", estimate_lambda(make_hypercubic(2), 12));
  }
  if (name == "locality" || name == "all") {
    auto rows = locality_scan({3, 4, 5, 6, 7, 8}, 14, cache.get(), opts);
    os << "m,mu_hat\n";
    for (const auto& r : rows)
      os << (r.m == 0 ? std::string("Z2") : std::to_string(r.m)) << ','
         << format_sig10(r.mu_hat) << '\n';
  }
  if (name == "sampler" || name == "all") {
    auto rows = displacement_stats(make_tree(3), {4, 8, 12, 16}, 100, 12345, opts);
    num("tree(3) nu (exact mode)", nu_estimate(rows));
    auto sp = speed_probe(make_tree(3), 12, 0.9, 200, 12345, opts);
    num("tree(3) speed_probe frequency (c=0.9)", sp.frequency);
  }
  if (name != "all" && os.str().empty()) known = false;
  if (!known) throw CLI::ValidationError("report", "unknown report: " + name);
  std::cout << "quantity,value\n" << os.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-avoiding walks, bridges and connective-constant bounds on "
               "lazily defined infinite graphs"};
  app.set_version_flag("--version", sawlab::version());
  app.require_subcommand(1);

  GraphArgs ga;
  RunArgs ra;
  int n = 10, step = 1, count = 100, k = 10, delta = 3, girth = 3;
  double c = 0.1;
  std::uint64_t seed = 1;
  std::vector<int> ns, ms{3, 4, 5, 6, 7, 8};
  std::optional<double> pull, push, iterate, semicubic, lambda;
  std::optional<int> delta_opt;
  std::string report_name;

  auto* families = app.add_subcommand("families", "list the built-in graph zoo");
  RunArgs ra_f;
  families->add_option("--format", ra_f.format)->check(CLI::IsMember({"csv", "json"}));

  auto* cnt = app.add_subcommand("count", "exact SAW counts sigma_0..sigma_n");
  add_graph_opts(cnt, ga);
  add_run_opts(cnt, ra);
  cnt->add_option("--n", n, "maximum walk length")->required();

  auto* why = app.add_subcommand("bridges", "exact bridge counts b_0..b_n");
  add_graph_opts(why, ga);
  add_run_opts(why, ra);
  why->add_option("--n", n, "maximum walk length")->required();

  auto* itv = app.add_subcommand("interval", "sandwich bounds b_n^{1/n} <= mu <= sigma_n^{1/n}");
  add_graph_opts(itv, ga);
  add_run_opts(itv, ra);
  itv->add_option("--n", n, "walk length")->required();

  auto* rat = app.add_subcommand("ratio", "ratio point estimate of mu");
  add_graph_opts(rat, ga);
  add_run_opts(rat, ra);
  rat->add_option("--n", n)->required();
  rat->add_option("--step", step)->check(CLI::IsMember({1, 2}));

  auto* fis = app.add_subcommand("fisher", "Fisher transformation recursions");
  add_run_opts(fis, ra);
  fis->add_option("--pull", pull, "mu of the Fisher transform of a graph with this mu");
  fis->add_option("--push", push, "mu of the graph whose Fisher transform has this mu");
  fis->add_option("--iterate", iterate, "iterate pull starting from this mu");
  fis->add_option("--k", k, "iteration count");
  fis->add_option("--semicubic", semicubic, "mu-tilde for the semi-cubic transform");

  auto* gb = app.add_subcommand("girthbound", "degree/girth upper bound for mu");
  add_run_opts(gb, ra);
  gb->add_option("--delta", delta)->required();
  gb->add_option("--girth", girth)->required();

  auto* cl = app.add_subcommand("cubiclower", "cubic girth-3/4 lower bounds");
  add_run_opts(cl, ra);
  cl->add_option("--girth", girth)->required();

  auto* sp = app.add_subcommand("spectral", "spectral lower bound / lambda estimate");
  add_graph_opts(sp, ga, /*required=*/false);
  add_run_opts(sp, ra);
  sp->add_option("--lambda", lambda, "exact spectral bottom, if known");
  sp->add_option("--delta", delta_opt, "vertex degree");
  sp->add_option("--n", n, "return-probability horizon for the estimate");

  auto* loc = app.add_subcommand("locality", "cylinder quotient scan vs the square lattice");
  add_run_opts(loc, ra);
  loc->add_option("--m-list", ms, "cylinder circumferences")->delimiter(',');
  loc->add_option("--n", n)->required();

  auto* sam = app.add_subcommand("sample", "exact-uniform SAW samples by unranking");
  add_graph_opts(sam, ga);
  add_run_opts(sam, ra);
  sam->add_option("--n", n)->required();
  sam->add_option("--count", count);
  sam->add_option("--seed", seed);

  auto* nu = app.add_subcommand("nu", "mean-square displacement table and Flory exponent fit");
  add_graph_opts(nu, ga);
  add_run_opts(nu, ra);
  nu->add_option("--n-list", ns, "walk lengths")->required()->delimiter(',');
  nu->add_option("--count", count);
  nu->add_option("--seed", seed);

  auto* spd = app.add_subcommand("speed", "empirical P(||pi_n|| <= c n)");
  add_graph_opts(spd, ga);
  add_run_opts(spd, ra);
  spd->add_option("--n", n)->required();
  spd->add_option("--c", c);
  spd->add_option("--count", count);
  spd->add_option("--seed", seed);

  auto* rep = app.add_subcommand("report", "named end-to-end experiment tables");
  add_run_opts(rep, ra);
  rep->add_option("name", report_name,
                  "ladder, bridge, hexagonal, z2, fisher, semicubic, cross-solver, "
                  "cubic-lower, spectral, locality, sampler, all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"error", e.what()}, {"kind", "usage"}};
    std::cerr << err.dump() << '\n';
    return 2;
  }

  try {
    if (families->parsed()) return cmd_families(ra_f.json());
    if (cnt->parsed()) return cmd_series(ga, ra, n, false);
    if (why->parsed()) return cmd_series(ga, ra, n, true);
    if (itv->parsed()) return cmd_interval(ga, ra, n);
    if (rat->parsed()) return cmd_ratio(ga, ra, n, step);
    if (fis->parsed()) return cmd_fisher(ra, pull, push, iterate, k, semicubic);
    if (gb->parsed()) return cmd_girthbound(ra, delta, girth);
    if (cl->parsed()) return cmd_cubiclower(ra, girth);
    if (sp->parsed()) return cmd_spectral(ga, ra, lambda, delta_opt, n);
    if (loc->parsed()) return cmd_locality(ra, ms, n);
    if (sam->parsed()) return cmd_sample(ga, ra, n, count, seed);
    if (nu->parsed()) return cmd_nu(ga, ra, ns, count, seed);
    if (spd->parsed()) return cmd_speed(ga, ra, n, c, count, seed);
    if (rep->parsed()) return cmd_report(ra, report_name);
  } catch (const CLI::ValidationError& e) {
    return emit_error("usage", e.what(), 2);
  } catch (const sawlab::budget_error& e) {
    return emit_error("budget", e.what(), 3);
  } catch (const std::invalid_argument& e) {
    return emit_error("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), 1);
  }
  return 0;
}
