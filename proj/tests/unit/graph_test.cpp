#include <gtest/gtest.h>

#include <random>

#include "geoset/graph.hpp"
#include "support/oracles.hpp"

using namespace geoset;

namespace {

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST(Graph, RejectsLoopsParallelEdgesAndMissingVertices) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), GraphError);
  EXPECT_THROW(g.add_edge(2, 2), GraphError);
  EXPECT_THROW(g.add_edge(0, 7), GraphError);
  EXPECT_THROW((void)g.neighbors(9), GraphError);
}

TEST(Graph, RemoveVertexRetiresIdAndDropsEdges) {
  Graph g = complete_graph(4);
  g.remove_vertex(2);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.id_bound(), 4u);
  EXPECT_FALSE(g.has_vertex(2));
  EXPECT_EQ(g.vertices(), (VertexSet{0, 1, 3}));
}

TEST(AddPath, LengthOneIsJustAnEdge) {
  Graph g(2);
  EXPECT_TRUE(add_path(g, 0, 1, 1).empty());
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(AddPath, LengthThreeAddsTwoInternals) {
  Graph g(2);
  const auto inner = add_path(g, 0, 1, 3);
  ASSERT_EQ(inner.size(), 2u);
  EXPECT_TRUE(g.has_edge(0, inner[0]));
  EXPECT_TRUE(g.has_edge(inner[1], 1));
  EXPECT_EQ(bfs_distances(g, 0).at(1), 3u);
}

TEST(AddPath, Errors) {
  Graph g(2);
  EXPECT_THROW(add_path(g, 0, 0, 2), GraphError);
  EXPECT_THROW(add_path(g, 0, 5, 2), GraphError);
  EXPECT_THROW(add_path(g, 0, 1, 0), GraphError);
}

TEST(AddPath, ShortensDistanceToLength) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = path_graph(12);
    const std::uint64_t len = 1 + trial % 5;
    const auto before = bfs_distances(g, 0).at(11);
    const auto inner = add_path(g, 0, 11, len);
    EXPECT_EQ(bfs_distances(g, 0).at(11), std::min<Distance>(before, static_cast<Distance>(len)));
    for (VertexId v : inner) EXPECT_EQ(g.degree(v), 2u);
  }
}

TEST(Bfs, BasicDistances) {
  const Graph p3 = path_graph(3);
  const auto row = bfs_distances(p3, 0);
  EXPECT_EQ(row.at(0), 0u);
  EXPECT_EQ(row.at(2), 2u);
  EXPECT_EQ(row.source(), 0u);
}

TEST(Bfs, UnreachableIsAbsent) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const auto row = bfs_distances(g, 0);
  EXPECT_FALSE(row.reached(2));
  EXPECT_FALSE(row.get(3).has_value());
  EXPECT_EQ(row.order().size(), 2u);
  EXPECT_THROW(bfs_distances(g, 9), GraphError);
}

TEST(Bfs, AgreesWithFloydWarshallAndIsLipschitzOnEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracles::random_connected_graph(3 + trial % 10, 0.2, rng);
    const auto d = oracles::floyd_warshall(g);
    for (VertexId s : g.vertices()) {
      const auto row = bfs_distances(g, s);
      for (VertexId v : g.vertices()) EXPECT_EQ(static_cast<int>(row.at(v)), d[s][v]);
      g.for_each_edge([&](VertexId u, VertexId v) {
        const auto a = row.at(u), b = row.at(v);
        EXPECT_LE(a > b ? a - b : b - a, 1u);
      });
    }
  }
}

TEST(Pendants, StarAndEdge) {
  Graph star(4);
  for (VertexId v = 1; v < 4; ++v) star.add_edge(0, v);
  EXPECT_EQ(pendant_vertices(star), (VertexSet{1, 2, 3}));
  EXPECT_EQ(pendant_vertices(path_graph(2)), (VertexSet{0, 1}));
}

TEST(Forest, Examples) {
  EXPECT_FALSE(is_forest(complete_graph(3)));
  EXPECT_TRUE(is_forest(Graph{}));
  EXPECT_TRUE(is_forest(path_graph(6)));
}

TEST(Forest, MatchesEdgeCountIdentity) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sg : oracles::all_graphs_up_to_iso(n)) {
      const Graph g = sg.to_graph();
      const bool acyclic_by_dfs = [&] {
        // a graph is acyclic iff each component has |V|-1 edges
        for (const auto& comp : connected_components(g)) {
          std::size_t deg = 0;
          for (VertexId v : comp) deg += g.degree(v);
          if (deg / 2 != comp.size() - 1) return false;
        }
        return true;
      }();
      EXPECT_EQ(is_forest(g), acyclic_by_dfs);
    }
  }
}

TEST(Plumbing, DeleteConnectedNeighbors) {
  const Graph k3 = complete_graph(3);
  const VertexSet doomed{1};
  const Graph p2 = delete_vertices(k3, doomed);
  EXPECT_EQ(p2.vertex_count(), 2u);
  EXPECT_EQ(p2.edge_count(), 1u);
  EXPECT_THROW(delete_vertices(k3, VertexSet{8}), GraphError);

  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(connected_components(two).size(), 2u);

  EXPECT_EQ(neighbors(path_graph(3), 1), (VertexSet{0, 2}));
}
