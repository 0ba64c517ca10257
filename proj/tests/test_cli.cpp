#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string binary() {
  const char* b = std::getenv("SAWLAB_BIN");
  REQUIRE(b != nullptr);
  return b;
}

RunResult run(const std::string& args) {
  const fs::path errfile = fs::temp_directory_path() / "sawlab_cli_stderr.txt";
  const std::string cmd = binary() + " " + args + " 2>" + errfile.string();
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream ef(errfile);
  r.err.assign(std::istreambuf_iterator<char>(ef), std::istreambuf_iterator<char>());
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("count emits CSV rows n,sigma_n") {
  auto r = run("count --family ladder --n 10 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "n,sigma_n");
  CHECK(ls[1] == "0,1");
  CHECK(ls[2] == "1,3");
  CHECK(ls[11] == "10,430");
}

TEST_CASE("every run echoes its config and the library version on stderr") {
  auto r = run("count --family ladder --n 4 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.err);
  REQUIRE_FALSE(ls.empty());
  auto j = json::parse(ls[0]);
  CHECK(j.at("version") == "0.1.0");
  CHECK(j.at("config").at("command") == "count");
  CHECK(j.at("config").at("graph").at("family") == "ladder");
}

TEST_CASE("families lists the zoo") {
  auto r = run("families");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("ladder") != std::string::npos);
  CHECK(r.out.find("free-product") != std::string::npos);
  CHECK(r.out.find("cylinder") != std::string::npos);
}

TEST_CASE("fisher pull solves the recursion") {
  auto r = run("fisher --pull 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("1.769292354") != std::string::npos);
}

TEST_CASE("interval straddles the square-lattice estimate") {
  auto r = run("interval --family hypercubic --dim 2 --n 14 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "graph_key,method,n,lower,upper,rigor_lower,rigor_upper");
  // parse the numeric columns (graph_key is quoted and contains commas)
  const auto tail = ls[1].substr(ls[1].rfind('"') + 2);
  double lower = 0, upper = 0;
  char method[32];
  int n = 0;
  char rl[32], ru[32];
  REQUIRE(std::sscanf(tail.c_str(), "%31[^,],%d,%lf,%lf,%31[^,],%31s", method, &n, &lower,
                      &upper, rl, ru) == 6);
  CHECK(std::string(method) == "sandwich");
  CHECK(n == 14);
  CHECK(lower <= 2.63815);
  CHECK(2.63815 <= upper);
  CHECK(std::string(rl) == "certified");
  CHECK(std::string(ru) == "certified");
}

TEST_CASE("json output parses") {
  auto r = run("ratio --family tree --degree 3 --n 6 --step 1 --format json --no-cache");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("method") == "ratio");
  CHECK(std::abs(j.at("lower").get<double>() - 2.0) < 1e-9);
}

TEST_CASE("unknown flags and bad arguments exit 2 with a structured error") {
  auto r = run("count --family ladder --n 5 --frobnicate");
  CHECK(r.exit_code == 2);
  auto j = json::parse(lines(r.err).back());
  CHECK(j.at("kind") == "usage");

  auto r2 = run("count --family nosuch --n 5");
  CHECK(r2.exit_code == 2);

  auto r3 = run("fisher --pull 0.5");
  CHECK(r3.exit_code == 2);
}

TEST_CASE("budget exhaustion exits 3 and still prints the partial series") {
  auto r = run("count --family hypercubic --dim 2 --n 14 --budget 2000 --no-cache");
  CHECK(r.exit_code == 3);
  auto ls = lines(r.out);
  CHECK(ls.size() >= 3);  // header plus at least a couple of levels
  auto j = json::parse(lines(r.err).back());
  CHECK(j.at("kind") == "budget");
}

TEST_CASE("interval under a tiny budget exits 3") {
  auto r = run("interval --family hypercubic --dim 2 --n 14 --budget 500 --no-cache");
  CHECK(r.exit_code == 3);
  auto j = json::parse(lines(r.err).back());
  CHECK(j.at("kind") == "budget");
}

TEST_CASE("transforms compose on the command line") {
  auto r = run("count --family tree --degree 3 --transform fisher --n 8 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto direct = run("count --family free-product --degree 3 --girth 3 --n 8 --no-cache");
  REQUIRE(direct.exit_code == 0);
  CHECK(lines(r.out).back() == lines(direct.out).back());

  auto bad = run("count --family ladder --transform semicubic --n 4");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("sample output is seed-deterministic") {
  auto a = run("sample --family hypercubic --dim 2 --n 5 --count 8 --seed 42 --no-cache");
  auto b = run("sample --family hypercubic --dim 2 --n 5 --count 8 --seed 42 --no-cache");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run("sample --family hypercubic --dim 2 --n 5 --count 8 --seed 43 --no-cache");
  CHECK(a.out != c.out);
}

TEST_CASE("nu subcommand emits the displacement table") {
  auto r = run("nu --family tree --degree 3 --n-list 4,6,8,12 --count 50 --seed 9 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "n,mean_sq_displacement,stderr,count,seed");
  REQUIRE(ls[5].substr(0, 3) == "nu,");
  const double nu = std::stod(ls[5].substr(3));
  CHECK(std::abs(nu - 1.0) < 1e-6);
}

TEST_CASE("speed subcommand") {
  auto r = run("speed --family tree --degree 3 --n 10 --c 0.9 --count 100 --seed 3 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].substr(0, 9) == "10,0.9,0,");
}

TEST_CASE("report regenerates byte-identical tables from the cache") {
  const fs::path cache = fs::temp_directory_path() / "sawlab_report_cache.jsonl";
  fs::remove(cache);
  const std::string args = "report z2 --cache " + cache.string();
  auto first = run(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(fs::exists(cache));
  const auto cache_size = fs::file_size(cache);
  auto second = run(args);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(fs::file_size(cache) == cache_size);  // no re-enumeration, no new records
  CHECK(first.out.find("2.6256") != std::string::npos);
  fs::remove(cache);
}

TEST_CASE("bridges subcommand") {
  auto r = run("bridges --family ladder --n 6 --no-cache");
  REQUIRE(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  CHECK(ls[0] == "n,b_n");
  CHECK(ls[1] == "0,1");
  CHECK(ls[2] == "1,1");
}

TEST_CASE("count json output carries decimal strings") {
  auto r = run("count --family hypercubic --dim 2 --n 6 --format json --no-cache");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("values").at(6).get<std::string>() == "780");
  CHECK_FALSE(j.at("truncated").get<bool>());
}

TEST_CASE("unknown report names are usage errors") {
  auto r = run("report nosuch --no-cache");
  CHECK(r.exit_code == 2);
}

TEST_CASE("girthbound and cubiclower subcommands") {
  auto r = run("girthbound --delta 3 --girth 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("1.769292354") != std::string::npos);
  auto c = run("cubiclower --girth 4");
  REQUIRE(c.exit_code == 0);
  CHECK(c.out.find("1.513085749") != std::string::npos);
}

TEST_CASE("spectral subcommand with exact and estimated lambda") {
  auto r = run("spectral --delta 3 --lambda 0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("1.414213562") != std::string::npos);
  auto e = run("spectral --family hypercubic --dim 2 --n 8 --no-cache");
  REQUIRE(e.exit_code == 0);
  CHECK(e.out.find("heuristic") != std::string::npos);
}
