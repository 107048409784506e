#include <gtest/gtest.h>

#include "geoset/reduction_sat_vc.hpp"
#include "geoset/smd.hpp"

using namespace geoset;

namespace {

E3P3Formula one_clause() { return {1, {{Literal{1, true}, Literal{1, false}, Literal{1, true}}}}; }

std::size_t count_edges(const SatVcInstance& h, bool (*kind)(const RoleTag&, const RoleTag&)) {
  std::size_t n = 0;
  h.graph.for_each_edge([&](VertexId u, VertexId v) { n += kind(h.roles[u], h.roles[v]); });
  return n;
}

bool both_literal(const RoleTag& a, const RoleTag& b) {
  return std::holds_alternative<role::LiteralVertex>(a) && std::holds_alternative<role::LiteralVertex>(b);
}
bool both_occurrence(const RoleTag& a, const RoleTag& b) {
  return std::holds_alternative<role::Occurrence>(a) && std::holds_alternative<role::Occurrence>(b);
}
bool mixed(const RoleTag& a, const RoleTag& b) { return !both_literal(a, b) && !both_occurrence(a, b); }

}  // namespace

TEST(SatVc, CountsForOneClause) {
  const auto h = reduce_e3p3sat_to_vc(one_clause());
  EXPECT_EQ(h.graph.vertex_count(), 9u);
  EXPECT_EQ(count_edges(h, both_literal), 3u);
  EXPECT_EQ(count_edges(h, both_occurrence), 3u);
  EXPECT_EQ(count_edges(h, mixed), 3u);
  EXPECT_EQ(h.k, 5);
}

TEST(SatVc, LinksJoinMatchingLiterals) {
  const auto f = gen_e3p3(3, 6, 5);
  const auto h = reduce_e3p3sat_to_vc(f);
  for (std::size_t q = 0; q < f.m(); ++q) {
    for (Part p : kParts) {
      const Literal& lit = f.clauses[q][index_of(p)];
      EXPECT_TRUE(h.graph.has_edge(h.occurrence(q, p), h.literal(p, lit.var, lit.positive)));
      EXPECT_EQ(h.graph.degree(h.occurrence(q, p)), 3u);
    }
  }
}

TEST(SatVc, WitnessIsCoverOfSizeK) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = gen_e3p3(2, 3, seed);
    const auto a = solve_sat_bruteforce(f);
    if (!a) continue;
    const auto h = reduce_e3p3sat_to_vc(f);
    const auto w = sat_vc_witness(h, *a);
    EXPECT_TRUE(is_vertex_cover(h.graph, w));
    EXPECT_EQ(static_cast<std::int64_t>(w.size()), h.k);
  }
}

TEST(SatVc, WitnessRejectsNonSatisfyingAssignment) {
  const E3P3Formula f{1, {{Literal{1, true}, Literal{1, true}, Literal{1, true}}}};
  const auto h = reduce_e3p3sat_to_vc(f);
  Assignment all_false;
  for (auto& v : all_false.values) v.assign(1, false);
  EXPECT_THROW(sat_vc_witness(h, all_false), std::invalid_argument);
}

TEST(SatVc, UnsatisfiableFormulaNeedsLargerCover) {
  E3P3Formula all8{1, {}};
  for (int mask = 0; mask < 8; ++mask) {
    all8.clauses.push_back({Literal{1, (mask & 1) != 0}, Literal{1, (mask & 2) != 0}, Literal{1, (mask & 4) != 0}});
  }
  const auto h = reduce_e3p3sat_to_vc(all8);
  EXPECT_GT(static_cast<std::int64_t>(min_vertex_cover(h.graph).size()), h.k);
}

TEST(SatVc, SatisfiableIffCoverWithinK) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto f = gen_e3p3(1 + static_cast<int>(seed % 2), 2 + seed % 4, seed);
    const auto h = reduce_e3p3sat_to_vc(f);
    const bool sat = solve_sat_bruteforce(f).has_value();
    EXPECT_EQ(sat, static_cast<std::int64_t>(min_vertex_cover(h.graph).size()) <= h.k) << "seed " << seed;
  }
}

TEST(SatVc, DocumentCarriesKAndRoles) {
  const auto h = reduce_e3p3sat_to_vc(one_clause());
  const auto doc = to_document(h);
  EXPECT_EQ(doc.k, 5);
  EXPECT_EQ(doc.roles.size(), 9u);
  EXPECT_EQ(doc.roles.at(h.literal(Part::Beta, 1, false)), "lit:beta:1:f");
}

TEST(SatVc, RejectsOutOfRangeVariable) {
  const E3P3Formula bad{1, {{Literal{2, true}, Literal{1, true}, Literal{1, true}}}};
  EXPECT_THROW(reduce_e3p3sat_to_vc(bad), std::invalid_argument);
}
