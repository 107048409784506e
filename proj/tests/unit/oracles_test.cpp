#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace geoset;
using namespace geoset::oracles;

// Known counts of unlabelled graphs and connected graphs on 1..7 vertices.
TEST(Enumerator, AllGraphCounts) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(all_graphs_up_to_iso(n).size(), expected[n - 1]) << "n=" << n;
}

TEST(Enumerator, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(connected_graphs_up_to_iso(n).size(), expected[n - 1]) << "n=" << n;
}

TEST(Enumerator, CanonicalCodeIgnoresLabelling) {
  // P4 labelled two ways
  SmallGraph a{4, {0b0010, 0b0101, 0b1010, 0b0100}};
  SmallGraph b{4, {0b0100, 0b1000, 0b1001, 0b0110}};
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  SmallGraph star{4, {0b1110, 0b0001, 0b0001, 0b0001}};
  EXPECT_NE(canonical_code(a), canonical_code(star));
}

TEST(Oracles, IntervalByPathsOnC4) {
  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  EXPECT_EQ(interval_by_paths(c4, 0, 2), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(interval_by_paths(c4, 0, 1), (VertexSet{0, 1}));
  EXPECT_EQ(interval_by_paths(c4, 3, 3), (VertexSet{3}));
}

TEST(Oracles, KnownValues) {
  Graph k4(4);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  }
  EXPECT_EQ(geodetic_number_oracle(k4), 4u);
  EXPECT_EQ(strong_dimension_oracle(k4), 3u);
  Graph p5(5);
  for (VertexId v = 1; v < 5; ++v) p5.add_edge(v - 1, v);
  EXPECT_EQ(geodetic_number_oracle(p5), 2u);
  EXPECT_EQ(strong_dimension_oracle(p5), 1u);
}
