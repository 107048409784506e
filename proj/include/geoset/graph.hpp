#pragma once

// Undirected simple graph with stable integer vertex ids, plus the BFS and
// structural predicates the rest of the library is built on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoset {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// Ids are dense and handed out in creation order. Deleted vertices keep their
/// slot (marked dead) so an id is never reused within one graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count), alive_(vertex_count, 1), live_(vertex_count) {}

  VertexId add_vertex() {
    if (adjacency_.size() >= std::numeric_limits<VertexId>::max()) throw GraphError("vertex id space exhausted");
    adjacency_.emplace_back();
    alive_.push_back(1);
    ++live_;
    return static_cast<VertexId>(adjacency_.size() - 1);
  }

  void add_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edges_;
  }

  void remove_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    auto drop = [](std::vector<VertexId>& list, VertexId x) {
      auto it = std::find(list.begin(), list.end(), x);
      if (it == list.end()) return false;
      list.erase(it);
      return true;
    };
    if (!drop(adjacency_[u], v)) throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    drop(adjacency_[v], u);
    --edges_;
  }

  /// Removes the vertex and its incident edges; the id stays retired.
  void remove_vertex(VertexId v) {
    require(v);
    for (VertexId w : adjacency_[v]) {
      auto& list = adjacency_[w];
      list.erase(std::find(list.begin(), list.end(), v));
      --edges_;
    }
    adjacency_[v].clear();
    adjacency_[v].shrink_to_fit();
    alive_[v] = 0;
    --live_;
  }

  [[nodiscard]] bool has_vertex(VertexId v) const { return v < alive_.size() && alive_[v] != 0; }

  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }

  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const {
    require(v);
    return adjacency_[v];
  }

  [[nodiscard]] std::size_t degree(VertexId v) const {
    require(v);
    return adjacency_[v].size();
  }

  [[nodiscard]] std::size_t vertex_count() const { return live_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_; }
  /// One past the largest id ever issued; size BFS arrays with this.
  [[nodiscard]] std::size_t id_bound() const { return adjacency_.size(); }

  [[nodiscard]] VertexSet vertices() const {
    VertexSet out;
    out.reserve(live_);
    for (std::size_t v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) out.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) fn(static_cast<VertexId>(u), v);
      }
    }
  }

  void require(VertexId v) const {
    if (!has_vertex(v)) throw GraphError("missing vertex " + std::to_string(v));
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> alive_;
  std::size_t live_ = 0;
  std::size_t edges_ = 0;
};

/// Joins u and v by a fresh simple path of `length` edges. Returns the new
/// internal vertices ordered from u towards v.
inline std::vector<VertexId> add_path(Graph& g, VertexId u, VertexId v, std::uint64_t length) {
  g.require(u);
  g.require(v);
  if (u == v) throw GraphError("add_path endpoints coincide");
  if (length == 0) throw GraphError("add_path length must be positive");
  std::vector<VertexId> internal;
  internal.reserve(length - 1);
  VertexId prev = u;
  for (std::uint64_t i = 1; i < length; ++i) {
    const VertexId next = g.add_vertex();
    g.add_edge(prev, next);
    internal.push_back(next);
    prev = next;
  }
  g.add_edge(prev, v);
  return internal;
}

/// Hop counts from one source. Vertices in other components have no entry.
class DistanceRow {
 public:
  DistanceRow() = default;
  DistanceRow(VertexId source, std::vector<std::uint32_t> dist, std::vector<VertexId> order)
      : source_(source), dist_(std::move(dist)), order_(std::move(order)) {}

  [[nodiscard]] VertexId source() const { return source_; }
  [[nodiscard]] bool reached(VertexId v) const { return v < dist_.size() && dist_[v] != kAbsent; }

  /// Distance to a reached vertex; throws for unreachable ones.
  [[nodiscard]] Distance at(VertexId v) const {
    if (!reached(v)) throw GraphError("vertex " + std::to_string(v) + " unreachable from " + std::to_string(source_));
    return dist_[v];
  }

  [[nodiscard]] std::optional<Distance> get(VertexId v) const {
    if (!reached(v)) return std::nullopt;
    return dist_[v];
  }

  /// Reached vertices in nondecreasing distance order (BFS visiting order).
  [[nodiscard]] std::span<const VertexId> order() const { return order_; }

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  friend DistanceRow bfs_distances(const Graph& g, VertexId source);

  VertexId source_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> order_;
};

inline DistanceRow bfs_distances(const Graph& g, VertexId source) {
  g.require(source);
  std::vector<std::uint32_t> dist(g.id_bound(), DistanceRow::kAbsent);
  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  dist[source] = 0;
  order.push_back(source);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId u = order[head];
    const std::uint32_t next = dist[u] + 1;
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == DistanceRow::kAbsent) {
        dist[w] = next;
        order.push_back(w);
      }
    }
  }
  return DistanceRow(source, std::move(dist), std::move(order));
}

inline VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

inline VertexSet neighbors(const Graph& g, VertexId v) {
  auto span = g.neighbors(v);
  return make_vertex_set({span.begin(), span.end()});
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  std::vector<VertexSet> comps;
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// The empty graph and single vertices count as connected.
inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

inline Graph delete_vertices(const Graph& g, std::span<const VertexId> doomed) {
  Graph out = g;
  for (VertexId v : make_vertex_set({doomed.begin(), doomed.end()})) out.remove_vertex(v);
  return out;
}

}  // namespace geoset
