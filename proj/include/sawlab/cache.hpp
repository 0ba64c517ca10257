#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "sawlab/enumerate.hpp"

namespace sawlab {

/// Append-only on-disk ledger of completed count series, keyed by
/// (graph key, kind, params). One JSON line per (n, value); values are
/// decimal strings because counts exceed native integer ranges. Readers see
/// only complete records; writes are serialized through a single mutex.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  const std::filesystem::path& path() const { return path_; }

  /// Longest contiguous prefix 0..k stored for this key, as a series.
  std::optional<CountSeries> lookup(const std::string& graph_key, SeriesKind kind,
                                    const json& params = json::object()) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key_of(graph_key, kind, params));
    if (it == entries_.end()) return std::nullopt;
    CountSeries s;
    s.kind = kind;
    s.graph_key = graph_key;
    s.params = params;
    for (int n = 0;; ++n) {
      auto v = it->second.find(n);
      if (v == it->second.end()) break;
      s.values.push_back(v->second);
    }
    if (s.values.empty()) return std::nullopt;
    s.n_requested = s.n_max();
    return s;
  }

  /// Appends any levels of a completed series not yet on disk.
  void store(const CountSeries& s) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& known = entries_[key_of(s.graph_key, s.kind, s.params)];
    heal_torn_tail();
    std::ofstream out(path_, std::ios::app);
    for (int n = 0; n <= s.n_max(); ++n) {
      if (known.count(n)) continue;
      known[n] = s.values[n];
      json line{{"graph_key", s.graph_key},
                {"kind", to_string(s.kind)},
                {"params", s.params},
                {"n", n},
                {"value", to_decimal(s.values[n])}};
      out << line.dump() << '\n';
    }
  }

  std::size_t record_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::size_t n = 0;
    for (const auto& [k, m] : entries_) n += m.size();
    return n;
  }

 private:
  static std::string key_of(const std::string& graph_key, SeriesKind kind, const json& params) {
    return graph_key + "\x1f" + to_string(kind) + "\x1f" + params.dump();
  }

  // A writer that died mid-line must not corrupt the next record.
  void heal_torn_tail() const {
    std::error_code ec;
    const auto size = std::filesystem::file_size(path_, ec);
    if (ec || size == 0) return;
    std::ifstream in(path_, std::ios::binary);
    in.seekg(static_cast<std::streamoff>(size) - 1);
    char last = '\n';
    in.get(last);
    if (last != '\n') {
      std::ofstream out(path_, std::ios::app);
      out << '\n';
    }
  }

  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (j.is_discarded() || !j.is_object()) continue;  // tolerate torn tail lines
      try {
        SeriesKind kind = SeriesKind::saw;
        const std::string ks = j.at("kind").get<std::string>();
        if (ks == "bridge") kind = SeriesKind::bridge;
        else if (ks == "extendable") kind = SeriesKind::extendable;
        else if (ks == "endpoint") kind = SeriesKind::endpoint;
        else if (ks != "saw") continue;
        entries_[key_of(j.at("graph_key").get<std::string>(), kind, j.at("params"))]
                [j.at("n").get<int>()] = from_decimal(j.at("value").get<std::string>());
      } catch (const json::exception&) {
        continue;
      }
    }
  }

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, std::map<int, BigInt>> entries_;
};

/// Fetches a series from the cache or computes and stores it. Non-canonical
/// graph specs (custom colorings) bypass the cache entirely.
inline CountSeries ensure_series(const RootedGraph& g, SeriesKind kind, int n,
                                 SeriesCache* cache, const EnumOptions& opts = {}) {
  const bool cacheable = g.canonical_spec && cache != nullptr;
  if (cacheable) {
    auto hit = cache->lookup(g.key(), kind, json::object());
    if (hit && hit->n_max() >= n) {
      hit->values.resize(n + 1);
      hit->n_requested = n;
      if (kind == SeriesKind::bridge) hit->rigor = g.height ? std::optional(g.height->rigor)
                                                            : std::nullopt;
      return *hit;
    }
  }
  CountSeries s = kind == SeriesKind::bridge ? count_bridges(g, n, opts) : count_saws(g, n, opts);
  if (cacheable) cache->store(s);
  return s;
}

}  // namespace sawlab
