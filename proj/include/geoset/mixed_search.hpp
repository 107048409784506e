#pragma once

// Mixed search game: a replaying simulator with the recontamination rule and
// a strategy generator for graphs that become a forest once a set of anchor
// vertices is deleted.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoset/graph.hpp"

namespace geoset {

enum class SearchOpKind : std::uint8_t { Place, Remove, Slide };

struct SearchOp {
  SearchOpKind kind = SearchOpKind::Place;
  VertexId at = 0;
  VertexId to = 0;  // slides only

  static SearchOp place(VertexId v) { return {SearchOpKind::Place, v, v}; }
  static SearchOp remove(VertexId v) { return {SearchOpKind::Remove, v, v}; }
  static SearchOp slide(VertexId from, VertexId to) { return {SearchOpKind::Slide, from, to}; }
  friend bool operator==(const SearchOp&, const SearchOp&) = default;
};

struct MixedSearchStrategy {
  std::vector<SearchOp> ops;
  std::size_t budget = 0;
  /// Op index at which each sub-round begins, ascending.
  std::vector<std::size_t> sub_round_starts;
};

struct SearchVerdict {
  std::size_t max_simultaneous = 0;
  bool all_cleared = false;
  std::size_t cleared_edges = 0;
  std::size_t total_edges = 0;
  std::size_t recontaminated_edges = 0;
};

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Drops every op from the start of the final sub-round on.
inline MixedSearchStrategy without_final_sub_round(MixedSearchStrategy s) {
  if (s.sub_round_starts.empty()) return s;
  s.ops.resize(s.sub_round_starts.back());
  s.sub_round_starts.pop_back();
  return s;
}

namespace detail {

class SearchState {
 public:
  explicit SearchState(const Graph& g) : g_(g), searchers_(g.id_bound(), 0), edge_of_(g.id_bound()) {
    for (VertexId u : g.vertices()) edge_of_[u].assign(g.degree(u), kNoEdge);
    for (VertexId u : g.vertices()) {
      const auto nb = g.neighbors(u);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const VertexId v = nb[k];
        if (u > v) continue;
        const auto back = g.neighbors(v);
        const auto pos = static_cast<std::size_t>(std::find(back.begin(), back.end(), u) - back.begin());
        edge_of_[u][k] = edge_of_[v][pos] = static_cast<std::uint32_t>(cleared_.size());
        cleared_.push_back(0);
      }
    }
  }

  void apply(const SearchOp& op) {
    switch (op.kind) {
      case SearchOpKind::Place:
        g_.require(op.at);
        arrive(op.at);
        break;
      case SearchOpKind::Remove:
        if (!g_.has_vertex(op.at) || searchers_[op.at] == 0) {
          throw SearchError("remove: no searcher on vertex " + std::to_string(op.at));
        }
        leave(op.at);
        break;
      case SearchOpKind::Slide: {
        if (!g_.has_vertex(op.at) || searchers_[op.at] == 0) {
          throw SearchError("slide: no searcher on vertex " + std::to_string(op.at));
        }
        const auto nb = g_.neighbors(op.at);
        const auto it = std::find(nb.begin(), nb.end(), op.to);
        if (it == nb.end()) {
          throw SearchError("slide along non-edge " + std::to_string(op.at) + "-" + std::to_string(op.to));
        }
        clear(edge_of_[op.at][static_cast<std::size_t>(it - nb.begin())]);
        arrive(op.to);
        leave(op.at);
        break;
      }
    }
  }

  [[nodiscard]] std::size_t on_board() const { return on_board_; }
  [[nodiscard]] std::size_t recontaminated() const { return recontaminated_; }
  [[nodiscard]] std::size_t cleared_count() const {
    return static_cast<std::size_t>(std::count(cleared_.begin(), cleared_.end(), std::uint8_t{1}));
  }
  [[nodiscard]] std::size_t edge_total() const { return cleared_.size(); }

 private:
  static constexpr std::uint32_t kNoEdge = 0xffffffffu;

  void clear(std::uint32_t e) { cleared_[e] = 1; }

  /// An edge is cleared once both of its endpoints hold searchers.
  void arrive(VertexId v) {
    ++searchers_[v];
    ++on_board_;
    const auto nb = g_.neighbors(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (searchers_[nb[k]] > 0) clear(edge_of_[v][k]);
    }
  }

  void leave(VertexId v) {
    --searchers_[v];
    --on_board_;
    if (searchers_[v] == 0) spread_from(v);
  }

  /// Contamination passes through unguarded vertices: an unguarded vertex
  /// touching a contaminated edge contaminates all of its edges.
  void spread_from(VertexId start) {
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      if (searchers_[x] > 0) continue;
      const auto nb = g_.neighbors(x);
      bool dirty = false;
      for (std::size_t k = 0; k < nb.size() && !dirty; ++k) dirty = !cleared_[edge_of_[x][k]];
      if (!dirty) continue;
      for (std::size_t k = 0; k < nb.size(); ++k) {
        auto& state = cleared_[edge_of_[x][k]];
        if (!state) continue;
        state = 0;
        ++recontaminated_;
        if (searchers_[nb[k]] == 0) stack.push_back(nb[k]);
      }
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> searchers_;
  std::vector<std::vector<std::uint32_t>> edge_of_;
  std::vector<std::uint8_t> cleared_;
  std::size_t on_board_ = 0;
  std::size_t recontaminated_ = 0;
};

}  // namespace detail

/// Replays the strategy from the all-contaminated state. Throws SearchError on
/// slides along non-edges and on removing or sliding an absent searcher.
inline SearchVerdict simulate_mixed_search(const Graph& g, const MixedSearchStrategy& strategy) {
  detail::SearchState state(g);
  SearchVerdict out;
  for (const SearchOp& op : strategy.ops) {
    state.apply(op);
    out.max_simultaneous = std::max(out.max_simultaneous, state.on_board());
  }
  out.total_edges = state.edge_total();
  out.cleared_edges = state.cleared_count();
  out.all_cleared = out.cleared_edges == out.total_edges;
  out.recontaminated_edges = state.recontaminated();
  return out;
}

namespace detail {

/// Rooted view of one tree of G - anchors.
struct RootedTree {
  VertexId root = 0;
  std::vector<VertexId> order;  // BFS order from the root
  std::vector<VertexId> parent;
  std::vector<std::uint32_t> need;
};

inline constexpr VertexId kNoParent = 0xffffffffu;

/// need(v) = searchers required to sweep v's subtree when one searcher stands
/// on v: leaves need 1, otherwise the hungriest child is entered by v's own
/// searcher and every other child costs one extra guard left on v.
inline void compute_need(const Graph& g, std::span<const std::uint8_t> is_anchor, RootedTree& t,
                         std::vector<VertexId>& parent_buf, std::vector<std::uint32_t>& need_buf) {
  t.order.clear();
  t.order.push_back(t.root);
  parent_buf[t.root] = kNoParent;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const VertexId u = t.order[head];
    for (VertexId w : g.neighbors(u)) {
      if (is_anchor[w] || w == parent_buf[u]) continue;
      parent_buf[w] = u;
      t.order.push_back(w);
    }
  }
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    const VertexId u = *it;
    std::uint32_t best = 0, second = 0;
    bool any = false;
    for (VertexId w : g.neighbors(u)) {
      if (is_anchor[w] || w == parent_buf[u]) continue;
      any = true;
      const std::uint32_t n = need_buf[w];
      if (n > best) {
        second = best;
        best = n;
      } else if (n > second) {
        second = n;
      }
    }
    need_buf[u] = any ? std::max(best, second + 1) : 1;
  }
}

}  // namespace detail

/// Places one stationary searcher on every anchor, then sweeps each tree of
/// G - anchors from a root minimising the number of mobile searchers. Trees
/// containing a vertex of `preferred_roots` are swept last, in that order,
/// rooted there unless another root is strictly cheaper. Each child subtree
/// of a root is one sub-round.
inline MixedSearchStrategy anchored_forest_strategy(const Graph& g, std::span<const VertexId> anchors,
                                                    std::span<const VertexId> preferred_roots) {
  std::vector<std::uint8_t> is_anchor(g.id_bound(), 0);
  for (VertexId a : anchors) {
    g.require(a);
    is_anchor[a] = 1;
  }
  const Graph forest = delete_vertices(g, anchors);
  if (!is_forest(forest)) throw SearchError("graph minus the anchors is not a forest");

  MixedSearchStrategy out;
  for (VertexId a : make_vertex_set({anchors.begin(), anchors.end()})) out.ops.push_back(SearchOp::place(a));

  std::vector<VertexSet> comps = connected_components(forest);
  std::vector<int> comp_of(g.id_bound(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<int> rank(comps.size(), -1);
  std::vector<VertexId> preferred_root_of(comps.size(), detail::kNoParent);
  int next_rank = 0;
  for (VertexId r : preferred_roots) {
    g.require(r);
    const int c = comp_of[r];
    if (c < 0 || rank[c] >= 0) continue;
    rank[c] = next_rank++;
    preferred_root_of[c] = r;
  }
  std::vector<std::size_t> schedule(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) schedule[c] = c;
  std::stable_sort(schedule.begin(), schedule.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  std::vector<VertexId> parent(g.id_bound(), detail::kNoParent);
  std::vector<std::uint32_t> need(g.id_bound(), 0);
  std::size_t mobile = 0;

  for (std::size_t c : schedule) {
    const VertexSet& comp = comps[c];
    std::vector<VertexId> candidates;
    if (preferred_root_of[c] != detail::kNoParent) candidates.push_back(preferred_root_of[c]);
    for (VertexId v : comp) {
      std::size_t deg = 0;
      for (VertexId w : g.neighbors(v)) deg += is_anchor[w] ? 0 : 1;
      if (deg >= 3) candidates.push_back(v);
    }
    if (candidates.empty()) {
      // a path: start from an end
      VertexId end = comp.front();
      for (VertexId v : comp) {
        std::size_t deg = 0;
        for (VertexId w : g.neighbors(v)) deg += is_anchor[w] ? 0 : 1;
        if (deg <= 1) {
          end = v;
          break;
        }
      }
      candidates.push_back(end);
    }
    detail::RootedTree best;
    std::uint32_t best_need = 0;
    for (VertexId r : candidates) {
      detail::RootedTree t;
      t.root = r;
      detail::compute_need(g, is_anchor, t, parent, need);
      if (best.order.empty() || need[r] < best_need) {
        best_need = need[r];
        best = std::move(t);
      }
    }
    // Recompute parent and need arrays for the chosen root.
    detail::compute_need(g, is_anchor, best, parent, need);
    mobile = std::max<std::size_t>(mobile, best_need);

    struct Frame {
      VertexId v;
      std::vector<VertexId> children;
      std::size_t next = 0;
    };
    auto children_of = [&](VertexId v) {
      std::vector<VertexId> kids;
      for (VertexId w : g.neighbors(v)) {
        if (!is_anchor[w] && w != parent[v]) kids.push_back(w);
      }
      std::sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
        return need[a] != need[b] ? need[a] < need[b] : a < b;
      });
      return kids;
    };

    const VertexId root = best.root;
    out.sub_round_starts.push_back(out.ops.size());
    out.ops.push_back(SearchOp::place(root));
    std::vector<Frame> stack;
    stack.push_back({root, children_of(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.children.empty()) {
        out.ops.push_back(SearchOp::remove(f.v));
        stack.pop_back();
        continue;
      }
      const bool at_root = f.v == root;
      if (f.next + 1 < f.children.size()) {
        const VertexId child = f.children[f.next++];
        if (at_root) out.sub_round_starts.push_back(out.ops.size());
        out.ops.push_back(SearchOp::place(f.v));
        out.ops.push_back(SearchOp::slide(f.v, child));
        stack.push_back({child, children_of(child)});
      } else {
        const VertexId child = f.children.back();
        if (at_root) out.sub_round_starts.push_back(out.ops.size());
        out.ops.push_back(SearchOp::slide(f.v, child));
        stack.pop_back();
        stack.push_back({child, children_of(child)});
      }
    }
  }
  out.budget = anchors.size() + mobile;
  return out;
}

}  // namespace geoset
