#pragma once

// Strong metric dimension through the strong resolving graph: smd(G) equals
// the vertex cover number of G_SR, whose edges are the mutually maximally
// distant pairs of G.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "geoset/convexity.hpp"
#include "geoset/geodetic_solver.hpp"
#include "geoset/graph.hpp"

namespace geoset {

using VertexPair = std::pair<VertexId, VertexId>;

/// Unordered pairs {u, v} with u < v and u ⋈ v, sorted.
struct MmdRelation {
  std::vector<VertexPair> pairs;

  [[nodiscard]] bool contains(VertexId u, VertexId v) const {
    const VertexPair key = u < v ? VertexPair{u, v} : VertexPair{v, u};
    return std::binary_search(pairs.begin(), pairs.end(), key);
  }
};

struct StrongResolvingGraph {
  Graph graph;
};

/// u is maximally distant from v when no neighbour of u is farther from v.
inline bool is_maximally_distant(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw GraphError("maximal distance needs two distinct vertices");
  g.require(u);
  const DistanceRow from_v = bfs_distances(g, v);
  if (!from_v.reached(u)) throw GraphError("maximal distance needs a connected graph");
  const Distance d = from_v.at(u);
  for (VertexId y : g.neighbors(u)) {
    if (from_v.at(y) > d) return false;
  }
  return true;
}

/// One BFS row per vertex; a row is discarded once its directed pairs are
/// recorded, so memory stays linear in the number of candidate pairs.
inline MmdRelation mmd_pairs(const Graph& g) {
  if (!is_connected(g)) throw GraphError("strong resolving graph needs a connected graph");
  std::vector<VertexPair> directed;  // (u, v): u maximally distant from v
  for (VertexId v : g.vertices()) {
    const DistanceRow row = bfs_distances(g, v);
    for (VertexId u : g.vertices()) {
      if (u == v) continue;
      const Distance d = row.at(u);
      bool maximal = true;
      for (VertexId y : g.neighbors(u)) {
        if (row.at(y) > d) {
          maximal = false;
          break;
        }
      }
      if (maximal) directed.emplace_back(u, v);
    }
  }
  std::sort(directed.begin(), directed.end());
  MmdRelation out;
  for (const auto& [u, v] : directed) {
    if (u < v && std::binary_search(directed.begin(), directed.end(), VertexPair{v, u})) out.pairs.emplace_back(u, v);
  }
  return out;
}

inline StrongResolvingGraph strong_resolving_graph(const Graph& g) {
  const MmdRelation rel = mmd_pairs(g);
  Graph sr(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v)) sr.remove_vertex(v);
  }
  for (const auto& [u, v] : rel.pairs) sr.add_edge(u, v);
  return {std::move(sr)};
}

namespace detail {

/// Branch and bound for minimum vertex cover on a compact copy of the graph.
/// Isolated vertices are dropped, pendant edges force the support vertex, and
/// the search branches on a maximum-degree vertex (smallest id on ties):
/// either it joins the cover or all of its neighbours do.
class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const Graph& g) : ids_(g.vertices()) {
    std::vector<int> index(g.id_bound(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) index[ids_[i]] = static_cast<int>(i);
    adj_.resize(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      for (VertexId w : g.neighbors(ids_[i])) adj_[i].push_back(index[w]);
    }
    alive_.assign(ids_.size(), 1);
    degree_.resize(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) degree_[i] = static_cast<int>(adj_[i].size());
    edges_ = g.edge_count();
  }

  VertexSet solve() {
    best_size_ = ids_.size() + 1;
    search();
    VertexSet out;
    for (int i : best_) out.push_back(ids_[i]);
    return make_vertex_set(std::move(out));
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  void kill(int v) {
    alive_[v] = 0;
    trail_.push_back(v);
    for (int w : adj_[v]) {
      if (alive_[w]) {
        --degree_[w];
        --edges_;
      }
    }
  }

  void take(int v) {
    cover_.push_back(v);
    kill(v);
  }

  void undo_to(std::size_t trail_mark, std::size_t cover_mark) {
    while (trail_.size() > trail_mark) {
      const int v = trail_.back();
      trail_.pop_back();
      alive_[v] = 1;
      for (int w : adj_[v]) {
        if (alive_[w]) {
          ++degree_[w];
          ++edges_;
        }
      }
    }
    cover_.resize(cover_mark);
  }

  void reduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (!alive_[v]) continue;
        if (degree_[v] == 0) {
          kill(static_cast<int>(v));
          changed = true;
        } else if (degree_[v] == 1) {
          for (int w : adj_[v]) {
            if (alive_[w]) {
              take(w);
              break;
            }
          }
          changed = true;
        }
      }
    }
  }

  /// Greedy maximal matching size: a lower bound on the remaining cover.
  std::size_t matching_bound() const {
    std::vector<std::uint8_t> used(adj_.size(), 0);
    std::size_t size = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!alive_[v] || used[v]) continue;
      for (int w : adj_[v]) {
        if (alive_[w] && !used[w]) {
          used[v] = used[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search() {
    ++nodes_;
    const std::size_t trail_mark = trail_.size();
    const std::size_t cover_mark = cover_.size();
    reduce();
    if (edges_ == 0) {
      if (cover_.size() < best_size_) {
        best_size_ = cover_.size();
        best_ = cover_;
      }
      undo_to(trail_mark, cover_mark);
      return;
    }
    if (cover_.size() + matching_bound() >= best_size_) {
      undo_to(trail_mark, cover_mark);
      return;
    }
    int pivot = -1;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (alive_[v] && (pivot < 0 || degree_[v] > degree_[pivot])) pivot = static_cast<int>(v);
    }

    const std::size_t inner_trail = trail_.size();
    const std::size_t inner_cover = cover_.size();
    take(pivot);
    search();
    undo_to(inner_trail, inner_cover);

    std::vector<int> nbrs;
    for (int w : adj_[pivot]) {
      if (alive_[w]) nbrs.push_back(w);
    }
    if (cover_.size() + nbrs.size() < best_size_) {
      for (int w : nbrs) take(w);
      kill(pivot);
      search();
    }
    undo_to(trail_mark, cover_mark);
  }

  VertexSet ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> alive_;
  std::vector<int> degree_;
  std::size_t edges_ = 0;
  std::vector<int> trail_;
  std::vector<int> cover_;
  std::vector<int> best_;
  std::size_t best_size_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline VertexSet min_vertex_cover(const Graph& g) {
  detail::VertexCoverSearch search(g);
  return search.solve();
}

inline constexpr std::size_t kVertexCoverOracleCap = 24;

/// Smallest vertex cover by enumerating subsets in order of size.
inline VertexSet min_vertex_cover_bruteforce(const Graph& g, std::size_t cap = kVertexCoverOracleCap) {
  if (g.vertex_count() > cap) throw GraphError("graph exceeds the brute-force cap");
  const VertexSet ids = g.vertices();
  std::vector<int> index(g.id_bound(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> edge_masks;
  g.for_each_edge([&](VertexId u, VertexId v) { edge_masks.push_back((1u << index[u]) | (1u << index[v])); });
  const std::size_t n = ids.size();
  auto covers = [&](std::uint32_t s) {
    return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & s) != 0; });
  };
  for (std::size_t size = 0; size <= n; ++size) {
    if (size == 0) {
      if (edge_masks.empty()) return {};
      continue;
    }
    // Gosper's hack over all `size`-subsets of n bits
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (covers(static_cast<std::uint32_t>(s))) {
        VertexSet out;
        for (std::size_t i = 0; i < n; ++i) {
          if (s >> i & 1u) out.push_back(ids[i]);
        }
        return out;
      }
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return ids;
}

struct StrongMetricDimension {
  std::size_t value = 0;
  VertexSet resolving_set;
};

inline StrongMetricDimension strong_metric_dimension(const Graph& g) {
  const StrongResolvingGraph sr = strong_resolving_graph(g);
  VertexSet cover = min_vertex_cover(sr.graph);
  return {cover.size(), std::move(cover)};
}

/// s strongly resolves {u, v} when v lies on a shortest u-s path or u lies on
/// a shortest v-s path.
inline bool strongly_resolves(detail::CompactDistances& dist, std::size_t s, std::size_t u, std::size_t v) {
  return dist.between(u, v, s) || dist.between(v, u, s);
}

inline constexpr std::size_t kStrongResolvingOracleCap = 12;

inline VertexSet min_strong_resolving_bruteforce(const Graph& g, std::size_t cap = kStrongResolvingOracleCap) {
  if (g.vertex_count() > cap) throw GraphError("graph exceeds the brute-force cap");
  if (!is_connected(g)) throw GraphError("strong resolving sets need a connected graph");
  detail::CompactDistances dist(g);
  const std::size_t n = dist.size();
  // resolvers[pair] as a bitmask over candidate vertices
  std::vector<std::uint32_t> resolvers;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::uint32_t mask = 0;
      for (std::size_t s = 0; s < n; ++s) {
        if (strongly_resolves(dist, s, u, v)) mask |= 1u << s;
      }
      resolvers.push_back(mask);
    }
  }
  std::uint32_t best = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if (std::popcount(subset) >= std::popcount(best)) continue;
    bool ok = std::all_of(resolvers.begin(), resolvers.end(), [&](std::uint32_t m) { return (m & subset) != 0; });
    if (ok) best = subset;
  }
  VertexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (best & (1u << i)) out.push_back(dist.id(i));
  }
  return out;
}

}  // namespace geoset
