#pragma once

// Shortest-path interval operator I(u, v), its union over a generator set, and
// geodetic-set verification.

#include <cstdint>
#include <span>
#include <vector>

#include "geoset/graph.hpp"

namespace geoset {

struct IntervalSet {
  VertexSet members;
  VertexSet generators;

  [[nodiscard]] bool contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
};

inline IntervalSet interval(const Graph& g, VertexId u, VertexId v) {
  const DistanceRow from_u = bfs_distances(g, u);
  if (!from_u.reached(v)) throw GraphError("interval endpoints lie in different components");
  const DistanceRow from_v = bfs_distances(g, v);
  const Distance total = from_u.at(v);
  IntervalSet out;
  for (VertexId w : from_u.order()) {
    if (from_u.at(w) + from_v.at(w) == total) out.members.push_back(w);
  }
  std::sort(out.members.begin(), out.members.end());
  out.generators = make_vertex_set({u, v});
  return out;
}

/// Marks every vertex lying on a shortest path from `row.source()` to some
/// target. Walks the BFS order backwards: w is marked iff it is a target or a
/// neighbour one step further from the source is marked.
inline void mark_geodesics_to_targets(const Graph& g, const DistanceRow& row, std::span<const std::uint8_t> is_target,
                                      std::vector<std::uint8_t>& on_path, std::vector<std::uint8_t>& covered) {
  const auto order = row.order();
  for (VertexId w : order) on_path[w] = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId w = *it;
    std::uint8_t mark = is_target[w];
    if (!mark) {
      const Distance next = row.at(w) + 1;
      for (VertexId y : g.neighbors(w)) {
        if (on_path[y] && row.at(y) == next) {
          mark = 1;
          break;
        }
      }
    }
    on_path[w] = mark;
    if (mark) covered[w] = 1;
  }
}

/// Coverage mask of I(S): one BFS per generator followed by a backward sweep
/// over its shortest-path DAG.
inline std::vector<std::uint8_t> interval_mask(const Graph& g, std::span<const VertexId> generators) {
  if (generators.empty()) throw GraphError("interval of an empty set");
  std::vector<std::uint8_t> is_target(g.id_bound(), 0);
  for (VertexId s : generators) {
    g.require(s);
    is_target[s] = 1;
  }
  std::vector<std::uint8_t> covered(g.id_bound(), 0);
  std::vector<std::uint8_t> on_path(g.id_bound(), 0);
  for (VertexId s : generators) {
    const DistanceRow row = bfs_distances(g, s);
    for (VertexId t : generators) {
      if (!row.reached(t)) throw GraphError("generators lie in different components");
    }
    mark_geodesics_to_targets(g, row, is_target, on_path, covered);
  }
  return covered;
}

inline IntervalSet interval_of_set(const Graph& g, std::span<const VertexId> s) {
  const auto mask = interval_mask(g, s);
  IntervalSet out;
  for (VertexId v : g.vertices()) {
    if (mask[v]) out.members.push_back(v);
  }
  out.generators = make_vertex_set({s.begin(), s.end()});
  return out;
}

struct GeodeticCheck {
  bool geodetic = false;
  VertexSet uncovered;
};

inline GeodeticCheck is_geodetic(const Graph& g, std::span<const VertexId> s) {
  if (!is_connected(g)) throw GraphError("geodetic check needs a connected graph");
  GeodeticCheck out;
  if (s.empty()) {
    out.uncovered = g.vertices();
    out.geodetic = out.uncovered.empty();
    return out;
  }
  const auto mask = interval_mask(g, s);
  for (VertexId v : g.vertices()) {
    if (!mask[v]) out.uncovered.push_back(v);
  }
  out.geodetic = out.uncovered.empty();
  return out;
}

}  // namespace geoset
