#pragma once

// Test-only graph sources and oracles. Everything here avoids the library's
// BFS: distances come from Floyd-Warshall, intervals from enumerating simple
// paths, and optima from plain subset enumeration.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "geoset/graph.hpp"

namespace geoset::oracles {

/// Small graph as one adjacency bitmask per vertex.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  [[nodiscard]] bool edge(int u, int v) const { return adj[u] >> v & 1u; }

  [[nodiscard]] Graph to_graph() const {
    Graph g(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(u, v)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
    return g;
  }

  [[nodiscard]] bool connected() const {
    if (n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (frontier >> v & 1u) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
  }
};

namespace detail {

/// Upper-triangle code of the graph relabelled by `order` (order[i] = old id
/// of new vertex i).
inline std::uint64_t code(const SmallGraph& g, const std::vector<int>& order) {
  std::uint64_t c = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) c = c << 1 | (g.edge(order[i], order[j]) ? 1u : 0u);
  }
  return c;
}

}  // namespace detail

/// Canonical code: the maximum upper-triangle code over relabellings that
/// respect an invariant ordering (degree, then sorted neighbour degrees).
inline std::uint64_t canonical_code(const SmallGraph& g) {
  const int n = g.n;
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int w = 0; w < n; ++w) {
      if (g.edge(v, w)) nd.push_back(std::popcount(g.adj[w]));
    }
    std::sort(nd.begin(), nd.end());
    inv[v].push_back(std::popcount(g.adj[v]));
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == cells.size()) {
      best = std::max(best, detail::code(g, order));
      return;
    }
    auto [b, e] = cells[cell];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(cell + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

/// All graphs on n vertices up to isomorphism, grown one vertex at a time.
inline std::vector<SmallGraph> all_graphs_up_to_iso(int n) {
  std::vector<SmallGraph> level{SmallGraph{0, {}}};
  for (int size = 1; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<SmallGraph> next;
    for (const SmallGraph& base : level) {
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        SmallGraph g{size, base.adj};
        g.adj.push_back(nb);
        for (int v = 0; v < size - 1; ++v) {
          if (nb >> v & 1u) g.adj[v] |= 1u << (size - 1);
        }
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<SmallGraph> connected_graphs_up_to_iso(int n) {
  std::vector<SmallGraph> out;
  for (auto& g : all_graphs_up_to_iso(n)) {
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

/// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(static_cast<VertexId>(parent(rng)), static_cast<VertexId>(v));
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && extra(rng)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return g;
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// All-pairs distances over vertex ids 0..id_bound-1 (dead ids stay at kInf).
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.id_bound();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (VertexId v : g.vertices()) {
    d[v][v] = 0;
    for (VertexId w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// I(u, v) by enumerating every simple u-v path and keeping the shortest ones.
inline VertexSet interval_by_paths(const Graph& g, VertexId u, VertexId v) {
  int best = kInf;
  std::set<VertexId> members;
  std::vector<VertexId> path{u};
  std::vector<std::uint8_t> on(g.id_bound(), 0);
  on[u] = 1;
  std::function<void(VertexId)> dfs = [&](VertexId x) {
    const int len = static_cast<int>(path.size()) - 1;
    if (len > best) return;
    if (x == v) {
      if (len < best) {
        best = len;
        members.clear();
      }
      members.insert(path.begin(), path.end());
      return;
    }
    for (VertexId y : g.neighbors(x)) {
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  dfs(u);
  return {members.begin(), members.end()};
}

/// Geodetic number by subset enumeration over Floyd-Warshall distances.
inline std::size_t geodetic_number_oracle(const Graph& g) {
  const auto d = floyd_warshall(g);
  const VertexSet ids = g.vertices();
  const std::size_t n = ids.size();
  if (n <= 1) return n;
  // cover[i][j] = bitmask of vertices on shortest ids[i]-ids[j] paths
  std::vector<std::vector<std::uint32_t>> cover(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t w = 0; w < n; ++w) {
        if (d[ids[i]][ids[w]] + d[ids[w]][ids[j]] == d[ids[i]][ids[j]]) cover[i][j] |= 1u << w;
      }
    }
  }
  const std::uint32_t full = (1u << n) - 1;
  std::size_t best = n;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    std::uint32_t got = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (s >> j & 1u) got |= cover[i][j];
      }
    }
    if (got == full) best = size;
  }
  return best;
}

/// Strong metric dimension by subset enumeration over Floyd-Warshall
/// distances: s resolves {u, v} when u or v lies on a shortest path from
/// the other to s.
inline std::size_t strong_dimension_oracle(const Graph& g) {
  const auto d = floyd_warshall(g);
  const VertexSet ids = g.vertices();
  const std::size_t n = ids.size();
  std::vector<std::uint32_t> resolvers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint32_t mask = 0;
      for (std::size_t s = 0; s < n; ++s) {
        const int us = d[ids[a]][ids[s]], vs = d[ids[b]][ids[s]], uv = d[ids[a]][ids[b]];
        if (us == uv + vs || vs == uv + us) mask |= 1u << s;
      }
      resolvers.push_back(mask);
    }
  }
  std::size_t best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    if (std::all_of(resolvers.begin(), resolvers.end(), [&](std::uint32_t m) { return (m & s) != 0; })) best = size;
  }
  return best;
}

}  // namespace geoset::oracles
