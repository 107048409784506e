#pragma once

// Exact minimum geodetic sets: pendant forcing plus fail-first branch and
// bound, and an exhaustive subset-search oracle for cross-validation.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "geoset/convexity.hpp"
#include "geoset/graph.hpp"

namespace geoset {

struct SolverStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct GeodeticSolution {
  VertexSet set;
  std::size_t size = 0;
  bool optimal = false;
  SolverStats stats;
};

struct GeodeticDecision {
  bool feasible = false;
  std::optional<VertexSet> witness;
  SolverStats stats;
};

namespace detail {

/// Distances over the live vertices of a graph, renumbered 0..n-1 in id
/// order. Rows are computed on first use and kept.
class CompactDistances {
 public:
  explicit CompactDistances(const Graph& g) : graph_(g), ids_(g.vertices()), index_(g.id_bound(), -1), rows_(ids_.size()) {
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
  }

  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] VertexId id(std::size_t i) const { return ids_[i]; }
  [[nodiscard]] int index(VertexId v) const { return index_[v]; }

  Distance operator()(std::size_t a, std::size_t b) {
    auto& row = rows_[a];
    if (!row) {
      const DistanceRow bfs = bfs_distances(graph_, ids_[a]);
      row.emplace(ids_.size());
      for (std::size_t j = 0; j < ids_.size(); ++j) (*row)[j] = bfs.at(ids_[j]);
    }
    return (*row)[b];
  }

  /// True iff w lies on some shortest a-b path.
  bool between(std::size_t a, std::size_t w, std::size_t b) { return (*this)(a, w) + (*this)(w, b) == (*this)(a, b); }

 private:
  const Graph& graph_;
  VertexSet ids_;
  std::vector<int> index_;
  std::vector<std::optional<std::vector<Distance>>> rows_;
};

class GeodeticSearch {
 public:
  GeodeticSearch(const Graph& g, std::size_t budget) : dist_(g), n_(dist_.size()), budget_(budget) {
    in_set_.assign(n_, 0);
    excluded_.assign(n_, 0);
    cover_count_.assign(n_, 0);
    pairs_covering_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::size_t t = c; t < n_; ++t) {
        for (std::size_t w = 0; w < n_; ++w) {
          if (dist_.between(c, w, t)) pairs_covering_[w].push_back({static_cast<int>(c), static_cast<int>(t)});
        }
      }
    }
  }

  std::optional<VertexSet> run(std::span<const VertexId> forced) {
    for (VertexId v : forced) {
      if (chosen_.size() >= budget_) return std::nullopt;
      add(static_cast<std::size_t>(dist_.index(v)));
    }
    if (!search()) return std::nullopt;
    VertexSet out;
    for (std::size_t c : chosen_) out.push_back(dist_.id(c));
    return make_vertex_set(std::move(out));
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  struct Pair {
    int a;
    int b;
  };

  void add(std::size_t c) {
    in_set_[c] = 1;
    chosen_.push_back(c);
    for (std::size_t s : chosen_) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (dist_.between(c, w, s)) ++cover_count_[w];
      }
    }
  }

  void remove_last() {
    const std::size_t c = chosen_.back();
    for (std::size_t s : chosen_) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (dist_.between(c, w, s)) --cover_count_[w];
      }
    }
    chosen_.pop_back();
    in_set_[c] = 0;
  }

  std::vector<std::size_t> candidates(std::size_t w) const {
    std::vector<std::size_t> out;
    for (const Pair& p : pairs_covering_[w]) {
      if (excluded_[p.a] || excluded_[p.b]) continue;
      if (!in_set_[p.a]) out.push_back(p.a);
      if (!in_set_[p.b]) out.push_back(p.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool search() {
    ++nodes_;
    std::optional<std::vector<std::size_t>> best;
    for (std::size_t w = 0; w < n_; ++w) {
      if (cover_count_[w] > 0) continue;
      auto cands = candidates(w);
      if (!best || cands.size() < best->size()) best = std::move(cands);
      if (best->empty()) break;
    }
    if (!best) return true;
    if (chosen_.size() >= budget_ || best->empty()) return false;

    std::vector<std::size_t> newly_excluded;
    bool found = false;
    for (std::size_t c : *best) {
      add(c);
      if (search()) {
        found = true;
        break;
      }
      remove_last();
      excluded_[c] = 1;
      newly_excluded.push_back(c);
    }
    for (std::size_t c : newly_excluded) excluded_[c] = 0;
    return found;
  }

  CompactDistances dist_;
  std::size_t n_;
  std::size_t budget_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint8_t> excluded_;
  std::vector<std::uint32_t> cover_count_;
  std::vector<std::vector<Pair>> pairs_covering_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Is there a geodetic set of size at most k? Pendants are forced first, then
/// the search branches on the uncovered vertex with the fewest candidates.
inline GeodeticDecision decide_geodetic(const Graph& g, std::size_t k) {
  if (!is_connected(g)) throw GraphError("geodetic search needs a connected graph");
  const auto start = std::chrono::steady_clock::now();
  GeodeticDecision out;
  const VertexSet pendants = pendant_vertices(g);
  if (pendants.size() > k) {
    out.stats.seconds = detail::seconds_since(start);
    return out;
  }
  detail::GeodeticSearch search(g, k);
  out.witness = search.run(pendants);
  out.feasible = out.witness.has_value();
  out.stats.nodes = search.nodes();
  out.stats.seconds = detail::seconds_since(start);
  return out;
}

inline GeodeticSolution min_geodetic(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  GeodeticSolution out;
  for (std::size_t k = pendant_vertices(g).size();; ++k) {
    auto decision = decide_geodetic(g, k);
    out.stats.nodes += decision.stats.nodes;
    if (decision.feasible) {
      out.set = std::move(*decision.witness);
      out.size = out.set.size();
      out.optimal = true;
      break;
    }
  }
  out.stats.seconds = detail::seconds_since(start);
  return out;
}

inline constexpr std::size_t kGeodeticOracleCap = 16;

/// Exhaustive search over supersets of the pendant set, by increasing size.
inline GeodeticSolution min_geodetic_bruteforce(const Graph& g, std::size_t cap = kGeodeticOracleCap) {
  if (g.vertex_count() > cap) throw GraphError("graph exceeds the brute-force cap");
  if (!is_connected(g)) throw GraphError("geodetic search needs a connected graph");
  const auto start = std::chrono::steady_clock::now();
  detail::CompactDistances dist(g);
  const std::size_t n = dist.size();
  GeodeticSolution out;
  if (n == 0) {
    out.optimal = true;
    return out;
  }

  std::vector<std::size_t> forced;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) (g.degree(dist.id(i)) == 1 ? forced : free).push_back(i);

  auto covers_all = [&](const std::vector<std::size_t>& s) {
    for (std::size_t w = 0; w < n; ++w) {
      bool hit = false;
      for (std::size_t i = 0; i < s.size() && !hit; ++i) {
        for (std::size_t j = i; j < s.size() && !hit; ++j) hit = dist.between(s[i], w, s[j]);
      }
      if (!hit) return false;
    }
    return true;
  };

  for (std::size_t extra = 0; extra <= free.size(); ++extra) {
    std::vector<std::size_t> pick(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      ++out.stats.nodes;
      std::vector<std::size_t> s = forced;
      for (std::size_t p : pick) s.push_back(free[p]);
      if (covers_all(s)) {
        for (std::size_t i : s) out.set.push_back(dist.id(i));
        out.set = make_vertex_set(std::move(out.set));
        out.size = out.set.size();
        out.optimal = true;
        out.stats.seconds = detail::seconds_since(start);
        return out;
      }
      // next combination of `extra` out of free.size()
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == free.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw GraphError("no geodetic set found");  // unreachable: V(G) is always geodetic
}

}  // namespace geoset
