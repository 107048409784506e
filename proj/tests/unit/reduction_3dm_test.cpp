#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "geoset/convexity.hpp"
#include "geoset/reduction_3dm.hpp"

using namespace geoset;

namespace {

const ThreeDMInstance kSingle{1, {{1, 1, 1}}};
const ThreeDMInstance kTwoSets{1, {{1, 1, 1}, {1, 1, 1}}};
const ThreeDMInstance kPairYes{2, {{1, 2, 1}, {2, 1, 2}, {1, 1, 2}}};

VertexId pendant_of(const Graph& g, VertexId v) {
  for (VertexId w : g.neighbors(v)) {
    if (g.degree(w) == 1) return w;
  }
  return kNoVertex;
}

std::string failing(const AuditReport& a) {
  std::string out;
  for (const auto& c : a.checks) {
    if (!c.pass) out += c.name + " (" + c.detail + "); ";
  }
  return out;
}

}  // namespace

TEST(ReductionParams, Minimums) {
  EXPECT_EQ(ReductionParams::desk_minimum(1), 5);
  EXPECT_EQ(ReductionParams::desk_minimum(2), 9);
  // epsilon = 1/100 needs M >= 200n
  EXPECT_EQ(ReductionParams::strict_minimum(1), 200);
  EXPECT_EQ(ReductionParams::strict_minimum(2, Rational{1, 2}), 9);
  EXPECT_TRUE(ReductionParams::strict_for(1).violations(1).empty());
  EXPECT_TRUE(ReductionParams::desk_for(2).violations(2).empty());
  EXPECT_FALSE((ReductionParams{8, {}, false}).violations(2).empty());
  EXPECT_FALSE((ReductionParams{9, {}, true}).violations(2).empty());
}

TEST(ReductionParams, RationalParsing) {
  EXPECT_EQ(Rational::parse("3/7").num, 3);
  EXPECT_EQ(Rational::parse("3/7").den, 7);
  EXPECT_EQ(Rational::parse("2").den, 1);
  EXPECT_THROW(Rational::parse("0/3"), ParseError);
  EXPECT_THROW(Rational::parse("a/b"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
}

TEST(Reduce3dm, RejectsInvalidParams) {
  EXPECT_THROW(reduce_3dm_to_geodetic(kPairYes, ReductionParams{5, {}, false}), std::invalid_argument);
}

TEST(Reduce3dm, DeskInstancePassesAudit) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  const auto audit = assert_construction(r);
  EXPECT_TRUE(audit.all_pass()) << failing(audit);
  EXPECT_TRUE(fvs13_check(r).pass);
  EXPECT_EQ(r.k, 2 + static_cast<std::int64_t>(pendant_vertices(r.graph).size()));
}

TEST(Reduce3dm, ThirteenCommonsAndNoPendantOnQ) {
  const auto r = reduce_3dm_to_geodetic(kTwoSets, ReductionParams::desk_for(1));
  std::size_t commons = 0;
  for (VertexId v : r.graph.vertices()) commons += std::holds_alternative<role::Common>(r.roles[v]);
  EXPECT_EQ(commons, kCommonCount);
  for (Part p : kParts) EXPECT_EQ(pendant_of(r.graph, r.layout.at(CommonKind::Q, p)), kNoVertex);
  EXPECT_NE(pendant_of(r.graph, r.layout.at(CommonKind::P, Part::Alpha)), kNoVertex);
}

TEST(Reduce3dm, PathLengthsFromTheLayout) {
  const auto r = reduce_3dm_to_geodetic(kTwoSets, ReductionParams::desk_for(1));
  const auto M2 = static_cast<std::size_t>(r.M2());
  const VertexId g1 = r.layout.at(CommonKind::G1), g2 = r.layout.at(CommonKind::G2);
  EXPECT_EQ(path_between(r, g1, g2).size(), M2 - 1);
  for (const auto& G : r.layout.gadgets) {
    for (VertexId y : G.y) EXPECT_EQ(path_between(r, g2, y).size(), M2 - 2);
  }
  const VertexId x = r.layout.gadgets[0].x[0];
  const auto row = bfs_distances(r.graph, x);
  for (Part p : kParts) {
    EXPECT_EQ(row.at(r.layout.at(CommonKind::P, p)), static_cast<Distance>(set_link_length(CommonKind::P, 1, r.params.M)));
  }
}

TEST(Reduce3dm, StrictSingleSet) {
  const auto r = reduce_3dm_to_geodetic(kSingle, ReductionParams::strict_for(1));
  const auto audit = assert_construction(r);
  EXPECT_TRUE(audit.all_pass()) << failing(audit);
  EXPECT_EQ(r.k, 1 + static_cast<std::int64_t>(pendant_vertices(r.graph).size()));
  const auto U = uncovered_sets(r);
  EXPECT_EQ(U.g1().size(), static_cast<std::size_t>(r.n() * (r.M2() - 1)));
  EXPECT_TRUE(pendant_cover_check(r).pass) << pendant_cover_check(r).detail;
}

TEST(Reduce3dm, SmallMIsFlagged) {
  const auto r = reduce_3dm_to_geodetic_unvalidated(kPairYes, ReductionParams{6, {}, false});
  const auto audit = assert_construction(r);
  ASSERT_NE(audit.find("params"), nullptr);
  EXPECT_FALSE(audit.find("params")->pass);
  EXPECT_FALSE(audit.all_pass());
}

TEST(Reduce3dm, ShortenedPathFailsItsDistanceCheck) {
  auto r = reduce_3dm_to_geodetic(kSingle, ReductionParams::desk_for(1));
  const VertexId x = r.layout.gadgets[0].x[0];
  const VertexId p = r.layout.at(CommonKind::P, Part::Alpha);
  VertexId victim = kNoVertex;
  for (VertexId v : r.graph.vertices()) {
    const auto* tag = std::get_if<role::PathInternal>(&r.roles[v]);
    if (tag && tag->from == x && tag->to == p) {
      victim = v;
      break;
    }
  }
  ASSERT_NE(victim, kNoVertex);
  const VertexSet ends = neighbors(r.graph, victim);
  ASSERT_EQ(ends.size(), 2u);
  r.graph.remove_vertex(victim);
  r.graph.add_edge(ends[0], ends[1]);
  const auto audit = check_distance_claims(r);
  const auto* link = audit.find("distance set-to-common");
  ASSERT_NE(link, nullptr);
  EXPECT_FALSE(link->pass);
  EXPECT_NE(link->detail.find("x1-p.alpha"), std::string::npos) << link->detail;
  EXPECT_TRUE(audit.find("distance common M^2 paths")->pass);
}

TEST(UncoveredSets, BlocksArePairwiseDisjoint) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  const auto U = uncovered_sets(r);
  for (Part p : kParts) {
    std::size_t total = 0;
    for (const auto& block : U.element_blocks[index_of(p)]) {
      EXPECT_FALSE(block.empty());
      total += block.size();
    }
    EXPECT_EQ(U.part(p).size(), total);
  }
  std::size_t g1_total = 0;
  for (const auto& block : U.g1_blocks) g1_total += block.size();
  EXPECT_EQ(U.g1().size(), g1_total);
}

TEST(UncoveredSets, PendantCoverHoldsForOneElement) {
  const auto r = reduce_3dm_to_geodetic(kTwoSets, ReductionParams::desk_for(1));
  const auto pc = pendant_cover_check(r);
  EXPECT_TRUE(pc.pass) << pc.detail;
}

// With two or more elements per part, the pendant next to q on the q-u path
// of element b reaches w of element a through q, and both routes from q to w
// (through u and through v) have the same length.
TEST(UncoveredSets, PendantsCoverElementBlocksWhenNIsTwo) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  const auto U = uncovered_sets(r);
  const auto& e1 = r.layout.element(Part::Alpha, 1);
  const auto& e2 = r.layout.element(Part::Alpha, 2);
  const VertexId pw = pendant_of(r.graph, e1.w);
  const VertexId pq = pendant_of(r.graph, e2.q_neighbor);
  ASSERT_NE(pw, kNoVertex);
  ASSERT_NE(pq, kNoVertex);
  const auto between = interval(r.graph, pw, pq);
  for (VertexId v : U.element_blocks[index_of(Part::Alpha)][0]) EXPECT_TRUE(between.contains(v));
  EXPECT_FALSE(pendant_cover_check(r).pass);
}

TEST(Discrimination, StrictSingleGadget) {
  const auto r = reduce_3dm_to_geodetic(kTwoSets, ReductionParams::strict_for(1, Rational{1, 10}));
  const auto d = discrimination_check(r);
  EXPECT_TRUE(d.all_pass()) << failing(d);
}

TEST(Discrimination, DeskPairInstance) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  const auto d = discrimination_check(r);
  EXPECT_TRUE(d.all_pass()) << failing(d);
}

TEST(ForwardWitness, PlantedSolutionIsGeodeticOfSizeK) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  const auto sol = solve_3dm_bruteforce(kPairYes);
  ASSERT_TRUE(sol);
  const auto W = forward_witness(r, *sol);
  EXPECT_EQ(static_cast<std::int64_t>(W.size()), r.k);
  EXPECT_TRUE(is_geodetic(r.graph, W).geodetic);
  EXPECT_THROW(forward_witness(r, {1, 3}), std::invalid_argument);
  EXPECT_THROW(forward_witness(r, {1, 1}), std::invalid_argument);
}

TEST(StructuredDecision, SingleElementIsAlwaysYes) {
  const auto r = reduce_3dm_to_geodetic(kTwoSets, ReductionParams::desk_for(1));
  const auto d = structured_decide(r);
  EXPECT_TRUE(d.feasible);
  ASSERT_EQ(d.choice.size(), 1u);
}

TEST(MixedSearch, ReducedInstanceWithinSeventeen) {
  for (const auto* inst : {&kSingle, &kTwoSets, &kPairYes}) {
    const auto r = reduce_3dm_to_geodetic(*inst, ReductionParams::desk_for(inst->n));
    const auto s = mixed_search_strategy(r);
    const auto v = simulate_mixed_search(r.graph, s);
    EXPECT_TRUE(v.all_cleared);
    EXPECT_LE(v.max_simultaneous, 17u);
    EXPECT_FALSE(simulate_mixed_search(r.graph, without_final_sub_round(s)).all_cleared);
  }
}

TEST(ReducedInstanceIo, RoundTrip) {
  const auto r = reduce_3dm_to_geodetic(kPairYes, ReductionParams::desk_for(2));
  std::stringstream buf;
  write_reduced_instance(buf, r);
  const auto back = read_reduced_instance(buf);
  EXPECT_TRUE(same_graph(back.graph, r.graph));
  EXPECT_EQ(back.k, r.k);
  EXPECT_EQ(back.roles, r.roles);
  EXPECT_EQ(back.source, r.source);
  EXPECT_EQ(back.params.M, r.params.M);
  EXPECT_EQ(back.params.strict, r.params.strict);
  EXPECT_EQ(back.layout.common, r.layout.common);
}

TEST(ReducedInstanceIo, MissingTrailersAreRejected) {
  std::istringstream no_k("g 1 0\nr 0 none\nset 1 1 1\nparam n 1\nparam M 5\n");
  EXPECT_THROW(read_reduced_instance(no_k), RoleError);
  std::istringstream no_n("g 1 0\nr 0 none\nset 1 1 1\nparam M 5\nk 2\n");
  EXPECT_THROW(read_reduced_instance(no_n), RoleError);
}
