#pragma once

// 3-Dimensional Matching to Geodetic Set: the gadget construction, its audits
// (distance table, pendant cover, discrimination grid, feedback vertex set),
// the forward witness, a structured decision procedure restricted to one set
// vertex per gadget, and the mixed-search certificate.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoset/audit.hpp"
#include "geoset/convexity.hpp"
#include "geoset/graph.hpp"
#include "geoset/graph_io.hpp"
#include "geoset/instances.hpp"
#include "geoset/mixed_search.hpp"
#include "geoset/roles.hpp"

namespace geoset {

class RoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 100;

  [[nodiscard]] std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  /// Accepts "p/q" or a bare integer.
  static Rational parse(std::string_view s) {
    const auto slash = s.find('/');
    const auto num = detail::to_int<std::int64_t>(s.substr(0, slash));
    const auto den = slash == std::string_view::npos ? std::optional<std::int64_t>{1}
                                                     : detail::to_int<std::int64_t>(s.substr(slash + 1));
    if (!num || !den || *num <= 0 || *den <= 0) throw ParseError("bad rational '" + std::string(s) + "'");
    return {*num, *den};
  }
};

struct ReductionParams {
  std::int64_t M = 0;
  Rational epsilon{};
  bool strict = true;

  /// Smallest M with epsilon * M >= 2n (and M > 4n).
  static std::int64_t strict_minimum(int n, Rational eps = {}) {
    const std::int64_t need = (2LL * n * eps.den + eps.num - 1) / eps.num;
    return std::max<std::int64_t>(need, 4LL * n + 1);
  }
  static std::int64_t desk_minimum(int n) { return 4LL * n + 1; }
  static ReductionParams strict_for(int n, Rational eps = {}) { return {strict_minimum(n, eps), eps, true}; }
  static ReductionParams desk_for(int n) { return {desk_minimum(n), Rational{}, false}; }

  [[nodiscard]] std::vector<std::string> violations(int n) const {
    std::vector<std::string> out;
    if (epsilon.num <= 0 || epsilon.den <= 0) out.push_back("epsilon must be a positive rational");
    if (M <= 4LL * n) out.push_back("M=" + std::to_string(M) + " must exceed 4n=" + std::to_string(4LL * n));
    if (strict && epsilon.num > 0 && M * epsilon.num < 2LL * n * epsilon.den) {
      out.push_back("strict mode needs epsilon*M >= 2n (M >= " + std::to_string(strict_minimum(n, epsilon)) + ")");
    }
    if (M * M - 2LL * n * M < 2) out.push_back("M^2 - 2nM must be at least 2");
    return out;
  }
};

/// Length of the path from a set vertex x to p/q/r of one part, where
/// `coord` is the set's element in that part.
inline std::int64_t set_link_length(CommonKind kind, std::int64_t coord, std::int64_t M) {
  switch (kind) {
    case CommonKind::P: return M * M + 2 * coord * M;
    case CommonKind::Q: return M * M - coord * M;
    default: return M * M - 2 * coord * M;
  }
}

/// Length of the path from element vertex u^part_a to p/q/r of its part.
inline std::int64_t element_link_length(CommonKind kind, std::int64_t a, std::int64_t M) {
  switch (kind) {
    case CommonKind::P: return M * M - 2 * a * M;
    case CommonKind::Q: return M * M + a * M;
    default: return M * M + 2 * a * M;
  }
}

inline constexpr VertexId kNoVertex = 0xffffffffu;
inline constexpr std::array<CommonKind, 3> kLinkKinds = {CommonKind::P, CommonKind::Q, CommonKind::R};

struct SetGadgetLayout {
  VertexId z1 = kNoVertex;
  VertexId z2 = kNoVertex;
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  /// branch[s][3 * part + kind] for kind in p, q, r
  std::vector<std::array<VertexId, 9>> branch;
};

struct ElementLayout {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  VertexId w = kNoVertex;
  VertexId q_neighbor = kNoVertex;
};

struct Layout {
  std::array<VertexId, kCommonCount> common{};
  std::vector<SetGadgetLayout> gadgets;                // [i - 1]
  std::array<std::vector<ElementLayout>, 3> elements;  // [part][a - 1]

  [[nodiscard]] VertexId at(CommonSlot s) const { return common[s.index()]; }
  [[nodiscard]] VertexId at(CommonKind k, Part p = Part::Alpha) const { return at(CommonSlot{k, p}); }
  [[nodiscard]] const ElementLayout& element(Part p, int a) const { return elements[index_of(p)][a - 1]; }
};

/// Recovers gadget positions from the role map. Throws RoleError when a
/// required role is missing or duplicated.
inline Layout build_layout(const std::vector<RoleTag>& roles, int n, std::size_t m) {
  Layout out;
  out.common.fill(kNoVertex);
  out.gadgets.resize(n);
  for (auto& g : out.gadgets) {
    g.x.assign(m, kNoVertex);
    g.y.assign(m, kNoVertex);
    std::array<VertexId, 9> none{};
    none.fill(kNoVertex);
    g.branch.assign(m, none);
  }
  for (auto& list : out.elements) list.assign(n, ElementLayout{});

  auto claim = [](VertexId& slot, VertexId v, const RoleTag& tag) {
    if (slot != kNoVertex) throw RoleError("duplicate role " + format_role(tag));
    slot = v;
  };
  for (VertexId v = 0; v < roles.size(); ++v) {
    const RoleTag& tag = roles[v];
    if (const auto* c = std::get_if<role::Common>(&tag)) {
      claim(out.common[c->slot.index()], v, tag);
    } else if (const auto* s = std::get_if<role::SetGadget>(&tag)) {
      if (s->gadget < 1 || s->gadget > n) throw RoleError("gadget index out of range: " + format_role(tag));
      auto& g = out.gadgets[s->gadget - 1];
      const bool indexed = s->part == role::SetPart::X || s->part == role::SetPart::Y || s->part == role::SetPart::Branch;
      if (indexed && (s->set < 1 || static_cast<std::size_t>(s->set) > m)) {
        throw RoleError("set index out of range: " + format_role(tag));
      }
      switch (s->part) {
        case role::SetPart::Z1: claim(g.z1, v, tag); break;
        case role::SetPart::Z2: claim(g.z2, v, tag); break;
        case role::SetPart::X: claim(g.x[s->set - 1], v, tag); break;
        case role::SetPart::Y: claim(g.y[s->set - 1], v, tag); break;
        case role::SetPart::Branch:
          if (s->target.kind < CommonKind::P) throw RoleError("branch target must be p, q or r: " + format_role(tag));
          claim(g.branch[s->set - 1][s->target.index() - 4], v, tag);
          break;
      }
    } else if (const auto* e = std::get_if<role::ElementGadget>(&tag)) {
      if (e->index < 1 || e->index > n) throw RoleError("element index out of range: " + format_role(tag));
      auto& el = out.elements[index_of(e->symbol)][e->index - 1];
      switch (e->part) {
        case role::ElementPart::U: claim(el.u, v, tag); break;
        case role::ElementPart::V: claim(el.v, v, tag); break;
        case role::ElementPart::W: claim(el.w, v, tag); break;
        case role::ElementPart::QNeighbor: claim(el.q_neighbor, v, tag); break;
      }
    }
  }

  auto need = [](VertexId v, const std::string& what) {
    if (v == kNoVertex) throw RoleError("missing role " + what);
  };
  for (std::size_t i = 0; i < kCommonCount; ++i) need(out.common[i], "common:" + common_name(CommonSlot::from_index(i)));
  for (int i = 1; i <= n; ++i) {
    const auto& g = out.gadgets[i - 1];
    const std::string head = "set:" + std::to_string(i) + ":";
    need(g.z1, head + "z1");
    need(g.z2, head + "z2");
    for (std::size_t s = 0; s < m; ++s) {
      need(g.x[s], head + "x:" + std::to_string(s + 1));
      need(g.y[s], head + "y:" + std::to_string(s + 1));
      for (VertexId b : g.branch[s]) need(b, head + "branch:" + std::to_string(s + 1));
    }
  }
  for (Part p : kParts) {
    for (int a = 1; a <= n; ++a) {
      const auto& el = out.element(p, a);
      const std::string head = "elem:" + std::string(part_name(p)) + ":" + std::to_string(a) + ":";
      need(el.u, head + "u");
      need(el.v, head + "v");
      need(el.w, head + "w");
      need(el.q_neighbor, head + "qn");
    }
  }
  return out;
}

struct ReducedInstance {
  Graph graph;
  std::int64_t k = 0;
  std::vector<RoleTag> roles;  // indexed by vertex id
  ReductionParams params;
  ThreeDMInstance source;
  Layout layout;

  [[nodiscard]] int n() const { return source.n; }
  [[nodiscard]] std::size_t m() const { return source.m(); }
  [[nodiscard]] std::int64_t M2() const { return params.M * params.M; }
  [[nodiscard]] VertexSet commons() const { return make_vertex_set({layout.common.begin(), layout.common.end()}); }
};

namespace detail {

class ReductionBuilder {
 public:
  VertexId vertex(RoleTag tag) {
    const VertexId v = graph.add_vertex();
    roles.push_back(tag);
    return v;
  }

  /// Fresh path of `length` edges; its internal vertices are tagged with the
  /// endpoints.
  std::vector<VertexId> path(VertexId a, VertexId b, std::int64_t length) {
    if (length < 1) throw GraphError("path length " + std::to_string(length) + " is not positive");
    auto internal = add_path(graph, a, b, static_cast<std::uint64_t>(length));
    roles.resize(graph.id_bound(), RoleTag{role::PathInternal{a, b}});
    return internal;
  }

  VertexId pendant(VertexId of) {
    const VertexId p = vertex(role::Pendant{of});
    graph.add_edge(of, p);
    return p;
  }

  Graph graph;
  std::vector<RoleTag> roles;
};

}  // namespace detail

/// Builds the construction for any M whose path lengths are realizable,
/// without checking the parameter invariants. Used to exercise the audit on
/// out-of-range parameters.
inline ReducedInstance reduce_3dm_to_geodetic_unvalidated(const ThreeDMInstance& inst, const ReductionParams& params) {
  inst.validate();
  const int n = inst.n;
  const std::size_t m = inst.m();
  const std::int64_t M = params.M;
  const std::int64_t M2 = M * M;
  detail::ReductionBuilder b;
  Layout L;

  for (std::size_t i = 0; i < kCommonCount; ++i) L.common[i] = b.vertex(role::Common{CommonSlot::from_index(i)});
  for (std::size_t i = 0; i < kCommonCount; ++i) {
    if (CommonSlot::from_index(i).kind != CommonKind::Q) b.pendant(L.common[i]);
  }
  const VertexId g1 = L.at(CommonKind::G1), g2 = L.at(CommonKind::G2);
  const VertexId g3 = L.at(CommonKind::G3), g4 = L.at(CommonKind::G4);
  b.path(g1, g2, M2);
  b.path(g3, g4, M2);

  L.gadgets.resize(n);
  for (int i = 1; i <= n; ++i) {
    auto& G = L.gadgets[i - 1];
    G.z1 = b.vertex(role::SetGadget{i, role::SetPart::Z1, 0, {}});
    G.z2 = b.vertex(role::SetGadget{i, role::SetPart::Z2, 0, {}});
    b.pendant(G.z2);
    b.path(G.z1, G.z2, M2);
    b.path(g1, G.z1, M2);
    b.path(g1, G.z2, M2);
    b.path(g2, G.z1, M2);
    for (std::size_t s = 1; s <= m; ++s) {
      const int set = static_cast<int>(s);
      const VertexId x = b.vertex(role::SetGadget{i, role::SetPart::X, set, {}});
      const VertexId y = b.vertex(role::SetGadget{i, role::SetPart::Y, set, {}});
      G.x.push_back(x);
      G.y.push_back(y);
      b.pendant(y);
      b.path(x, y, M2);
      b.path(G.z1, x, M2);
      b.path(g4, y, M2);
      b.path(g2, y, M2 - 1);
      std::array<VertexId, 9> branches{};
      for (Part part : kParts) {
        const std::int64_t coord = inst.sets[s - 1].coord(part);
        for (CommonKind kind : kLinkKinds) {
          const CommonSlot slot{kind, part};
          const std::int64_t len = set_link_length(kind, coord, M);
          if (len < 2) throw GraphError("branch path to " + common_name(slot) + " needs length >= 2");
          const VertexId branch = b.path(x, L.at(slot), len).front();
          b.roles[branch] = role::SetGadget{i, role::SetPart::Branch, set, slot};
          branches[slot.index() - 4] = branch;
          b.path(branch, g2, M2);
          b.path(branch, g3, M2);
        }
      }
      G.branch.push_back(branches);
    }
  }

  for (Part part : kParts) {
    auto& list = L.elements[index_of(part)];
    for (int a = 1; a <= n; ++a) {
      ElementLayout el;
      el.u = b.vertex(role::ElementGadget{role::ElementPart::U, part, a});
      el.v = b.vertex(role::ElementGadget{role::ElementPart::V, part, a});
      el.w = b.vertex(role::ElementGadget{role::ElementPart::W, part, a});
      b.pendant(el.u);
      b.pendant(el.w);
      b.path(el.w, el.u, M2);
      b.path(el.w, el.v, M2);
      b.path(el.u, L.at(CommonKind::P, part), element_link_length(CommonKind::P, a, M));
      const auto q_path = b.path(L.at(CommonKind::Q, part), el.u, element_link_length(CommonKind::Q, a, M));
      b.path(el.u, L.at(CommonKind::R, part), element_link_length(CommonKind::R, a, M));
      b.path(el.v, L.at(CommonKind::Q, part), M2 + a * M);
      el.q_neighbor = q_path.front();
      b.roles[el.q_neighbor] = role::ElementGadget{role::ElementPart::QNeighbor, part, a};
      b.pendant(el.q_neighbor);
      b.path(el.w, g4, M2);
      list.push_back(el);
    }
  }

  ReducedInstance out;
  out.graph = std::move(b.graph);
  out.roles = std::move(b.roles);
  out.params = params;
  out.source = inst;
  out.layout = std::move(L);
  out.k = n + static_cast<std::int64_t>(pendant_vertices(out.graph).size());
  return out;
}

/// Throws std::invalid_argument when the parameters violate the invariants.
inline ReducedInstance reduce_3dm_to_geodetic(const ThreeDMInstance& inst, const ReductionParams& params) {
  inst.validate();
  const auto bad = params.violations(inst.n);
  if (!bad.empty()) throw std::invalid_argument("invalid reduction parameters: " + bad.front());
  return reduce_3dm_to_geodetic_unvalidated(inst, params);
}

/// One specified shortest-path length, checked from `from`.
struct DistanceClaim {
  VertexId from = 0;
  VertexId to = 0;
  std::int64_t length = 0;
  std::string family;
  std::string label;
};

inline std::vector<DistanceClaim> distance_claims(const ReducedInstance& r) {
  const Layout& L = r.layout;
  const std::int64_t M = r.params.M, M2 = r.M2();
  const VertexId g1 = L.at(CommonKind::G1), g2 = L.at(CommonKind::G2);
  const VertexId g3 = L.at(CommonKind::G3), g4 = L.at(CommonKind::G4);
  std::vector<DistanceClaim> out;
  auto add = [&](VertexId from, VertexId to, std::int64_t len, std::string family, std::string label) {
    out.push_back({from, to, len, std::move(family), std::move(label)});
  };
  add(g1, g2, M2, "common M^2 paths", "g1-g2");
  add(g3, g4, M2, "common M^2 paths", "g3-g4");
  for (int i = 1; i <= r.n(); ++i) {
    const auto& G = L.gadgets[i - 1];
    const std::string gi = "set" + std::to_string(i);
    add(G.z1, G.z2, M2, "set gadget M^2 paths", gi + ".z1-z2");
    add(g1, G.z1, M2, "set gadget M^2 paths", gi + ".g1-z1");
    add(g1, G.z2, M2, "set gadget M^2 paths", gi + ".g1-z2");
    add(g2, G.z1, M2, "set gadget M^2 paths", gi + ".g2-z1");
    for (std::size_t s = 0; s < r.m(); ++s) {
      const std::string xs = gi + ".x" + std::to_string(s + 1);
      const std::string ys = gi + ".y" + std::to_string(s + 1);
      add(G.z1, G.x[s], M2, "set gadget M^2 paths", xs + "-z1");
      add(G.x[s], G.y[s], M2, "set gadget M^2 paths", xs + "-y");
      add(g4, G.y[s], M2, "set gadget M^2 paths", ys + "-g4");
      add(g2, G.y[s], M2 - 1, "g2-y (M^2-1)", ys + "-g2");
      for (Part part : kParts) {
        const std::int64_t coord = r.source.sets[s].coord(part);
        for (CommonKind kind : kLinkKinds) {
          const CommonSlot slot{kind, part};
          const VertexId branch = G.branch[s][slot.index() - 4];
          add(G.x[s], L.at(slot), set_link_length(kind, coord, M), "set-to-common", xs + "-" + common_name(slot));
          add(G.x[s], branch, 1, "branch vertices", xs + "-branch(" + common_name(slot) + ")");
          add(g2, branch, M2, "branch vertices", xs + ".branch(" + common_name(slot) + ")-g2");
          add(g3, branch, M2, "branch vertices", xs + ".branch(" + common_name(slot) + ")-g3");
        }
      }
    }
  }
  for (Part part : kParts) {
    for (int a = 1; a <= r.n(); ++a) {
      const auto& el = L.element(part, a);
      const std::string ea = "elem." + std::string(part_name(part)) + std::to_string(a);
      for (CommonKind kind : kLinkKinds) {
        const CommonSlot slot{kind, part};
        add(L.at(slot), el.u, element_link_length(kind, a, M), "element-to-common", ea + ".u-" + common_name(slot));
      }
      add(L.at(CommonKind::Q, part), el.v, M2 + a * M, "element-to-common", ea + ".v-" + common_name({CommonKind::Q, part}));
      add(L.at(CommonKind::Q, part), el.q_neighbor, 1, "element-to-common", ea + ".qn");
      add(el.w, el.u, M2, "element M^2 paths", ea + ".w-u");
      add(el.w, el.v, M2, "element M^2 paths", ea + ".w-v");
      add(g4, el.w, M2, "element M^2 paths", ea + ".w-g4");
    }
  }
  return out;
}

/// Every claim is checked by BFS in the full graph, one search per distinct
/// source, and grouped into one report entry per family.
inline AuditReport check_distance_claims(const ReducedInstance& r) {
  auto claims = distance_claims(r);
  std::stable_sort(claims.begin(), claims.end(), [](const DistanceClaim& a, const DistanceClaim& b) { return a.from < b.from; });
  std::vector<std::string> families;
  std::map<std::string, std::pair<std::size_t, FailureLog>> tally;
  for (const auto& c : claims) {
    if (!tally.contains(c.family)) {
      families.push_back(c.family);
      tally.emplace(c.family, std::pair<std::size_t, FailureLog>{0, FailureLog{}});
    }
  }
  std::size_t i = 0;
  while (i < claims.size()) {
    const DistanceRow row = bfs_distances(r.graph, claims[i].from);
    for (; i < claims.size() && claims[i].from == row.source(); ++i) {
      const DistanceClaim& c = claims[i];
      auto& [checked, log] = tally.at(c.family);
      ++checked;
      const auto got = row.get(c.to);
      if (!got || static_cast<std::int64_t>(*got) != c.length) {
        log.note(c.label + " expected " + std::to_string(c.length) + " got " + (got ? std::to_string(*got) : "unreachable"));
      }
    }
  }
  AuditReport out;
  for (const auto& family : families) {
    const auto& [checked, log] = tally.at(family);
    out.add("distance " + family, log.empty(), log.summary(checked));
  }
  return out;
}

inline CheckResult fvs13_check(const ReducedInstance& r) {
  const VertexSet commons = r.commons();
  const Graph rest = delete_vertices(r.graph, commons);
  const bool forest = commons.size() == kCommonCount && is_forest(rest);
  const std::size_t cycles_rank = rest.edge_count() + connected_components(rest).size() - rest.vertex_count();
  return {"fvs13 forest", forest,
          std::to_string(commons.size()) + " commons deleted, cycle rank " + std::to_string(cycles_rank)};
}

/// The four families of vertices left uncovered by the pendants, read off the
/// role map. Vg1 holds one block per set gadget and each element family one
/// block V^part_a per index a.
struct UncoveredSets {
  std::vector<VertexSet> g1_blocks;
  std::array<std::vector<VertexSet>, 3> element_blocks;

  [[nodiscard]] VertexSet g1() const { return join(g1_blocks); }
  [[nodiscard]] VertexSet part(Part p) const { return join(element_blocks[index_of(p)]); }
  [[nodiscard]] VertexSet all() const {
    VertexSet out = g1();
    for (Part p : kParts) {
      const VertexSet more = part(p);
      out.insert(out.end(), more.begin(), more.end());
    }
    return make_vertex_set(std::move(out));
  }

 private:
  static VertexSet join(const std::vector<VertexSet>& blocks) {
    VertexSet out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return make_vertex_set(std::move(out));
  }
};

inline UncoveredSets uncovered_sets(const ReducedInstance& r) {
  if (r.roles.size() != r.graph.id_bound()) throw RoleError("missing roles");
  const int n = r.n();
  const Layout& L = r.layout;
  // endpoint lookups: z1 of gadget i -> i; v / w of (part, a) -> 3 * (a - 1) + part
  std::vector<int> z1_of(r.graph.id_bound(), -1), v_of(r.graph.id_bound(), -1), w_of(r.graph.id_bound(), -1);
  std::vector<int> q_part(r.graph.id_bound(), -1);
  for (int i = 1; i <= n; ++i) z1_of[L.gadgets[i - 1].z1] = i - 1;
  for (Part p : kParts) {
    q_part[L.at(CommonKind::Q, p)] = static_cast<int>(index_of(p));
    for (int a = 1; a <= n; ++a) {
      v_of[L.element(p, a).v] = 3 * (a - 1) + static_cast<int>(index_of(p));
      w_of[L.element(p, a).w] = 3 * (a - 1) + static_cast<int>(index_of(p));
    }
  }
  const VertexId g1 = L.at(CommonKind::G1);

  UncoveredSets out;
  out.g1_blocks.resize(n);
  for (auto& list : out.element_blocks) list.resize(n);
  auto element_slot = [&](int code) -> VertexSet& { return out.element_blocks[code % 3][code / 3]; };
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    if (!r.graph.has_vertex(v)) continue;
    const auto* path = std::get_if<role::PathInternal>(&r.roles[v]);
    if (!path) continue;
    for (auto [a, b] : {std::pair{path->from, path->to}, std::pair{path->to, path->from}}) {
      if (a == g1 && z1_of[b] >= 0) out.g1_blocks[z1_of[b]].push_back(v);
      if (a < q_part.size() && q_part[a] >= 0 && b < v_of.size() && v_of[b] >= 0 && v_of[b] % 3 == q_part[a]) {
        element_slot(v_of[b]).push_back(v);
      }
      if (b < w_of.size() && a < v_of.size() && v_of[a] >= 0 && w_of[b] == v_of[a]) element_slot(v_of[a]).push_back(v);
    }
  }
  for (Part p : kParts) {
    for (int a = 1; a <= n; ++a) out.element_blocks[index_of(p)][a - 1].push_back(L.element(p, a).v);
  }
  for (auto& b : out.g1_blocks) b = make_vertex_set(std::move(b));
  for (auto& list : out.element_blocks) {
    for (auto& b : list) b = make_vertex_set(std::move(b));
  }
  return out;
}

/// Structural role invariants: 13 commons, pendant tags match the degree-one
/// vertices and point at their unique neighbour, no pendant on any q.
inline AuditReport check_roles(const ReducedInstance& r) {
  AuditReport out;
  std::size_t commons = 0;
  VertexSet tagged;
  FailureLog bad_of;
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    if (!r.graph.has_vertex(v)) continue;
    if (std::holds_alternative<role::Common>(r.roles[v])) ++commons;
    if (const auto* p = std::get_if<role::Pendant>(&r.roles[v])) {
      tagged.push_back(v);
      const auto nb = r.graph.neighbors(v);
      if (nb.size() != 1 || nb[0] != p->of) bad_of.note("pendant " + std::to_string(v));
    }
  }
  out.add("13 common vertices", commons == kCommonCount, std::to_string(commons) + " found");
  const VertexSet pendants = pendant_vertices(r.graph);
  out.add("pendant roles", bad_of.empty() && tagged == pendants,
          std::to_string(tagged.size()) + " tagged, " + std::to_string(pendants.size()) + " degree-one; " +
              bad_of.summary(tagged.size()));
  std::size_t q_pendants = 0;
  for (Part p : kParts) {
    for (VertexId w : r.graph.neighbors(r.layout.at(CommonKind::Q, p))) q_pendants += r.graph.degree(w) == 1 ? 1 : 0;
  }
  out.add("no pendant on q commons", q_pendants == 0, std::to_string(q_pendants) + " found");
  return out;
}

inline CheckResult pendant_cover_check(const ReducedInstance& r) {
  const VertexSet P = pendant_vertices(r.graph);
  const auto mask = interval_mask(r.graph, P);
  const VertexSet expected_gap = uncovered_sets(r).all();
  std::vector<std::uint8_t> in_gap(r.graph.id_bound(), 0);
  for (VertexId v : expected_gap) in_gap[v] = 1;
  std::size_t covered_but_listed = 0, missed_but_unlisted = 0;
  for (VertexId v : r.graph.vertices()) {
    if (mask[v] && in_gap[v]) ++covered_but_listed;
    if (!mask[v] && !in_gap[v]) ++missed_but_unlisted;
  }
  return {"pendant cover I(P) = V - (Vg1 u Va u Vb u Vc)", covered_but_listed == 0 && missed_but_unlisted == 0,
          "|P|=" + std::to_string(P.size()) + " |gap|=" + std::to_string(expected_gap.size()) +
              " covered-but-listed=" + std::to_string(covered_but_listed) +
              " uncovered-but-unlisted=" + std::to_string(missed_but_unlisted)};
}

/// Full construction audit: parameters, roles, connectivity, k, the feedback
/// vertex set and every distance claim.
inline AuditReport assert_construction(const ReducedInstance& r) {
  AuditReport out;
  const auto bad = r.params.violations(r.n());
  std::string detail = "M=" + std::to_string(r.params.M) + " n=" + std::to_string(r.n());
  for (const auto& b : bad) detail += "; " + b;
  out.add("params", bad.empty(), detail);
  out.merge(check_roles(r));
  out.add("connected", is_connected(r.graph));
  const auto P = static_cast<std::int64_t>(pendant_vertices(r.graph).size());
  out.add("k = n + |P|", r.k == r.n() + P,
          "k=" + std::to_string(r.k) + " n=" + std::to_string(r.n()) + " |P|=" + std::to_string(P));
  out.checks.push_back(fvs13_check(r));
  out.merge(check_distance_claims(r));
  return out;
}

/// Walks the fresh path joining a and b; returns its internal vertices from a.
inline std::vector<VertexId> path_between(const ReducedInstance& r, VertexId a, VertexId b) {
  auto on_path = [&](VertexId v) {
    const auto* p = std::get_if<role::PathInternal>(&r.roles[v]);
    return p && ((p->from == a && p->to == b) || (p->from == b && p->to == a));
  };
  std::vector<VertexId> out;
  VertexId prev = a, cur = a;
  while (true) {
    VertexId next = kNoVertex;
    for (VertexId w : r.graph.neighbors(cur)) {
      if (w != prev && on_path(w)) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

namespace detail {

inline std::vector<Distance> restrict_row(const DistanceRow& row, std::span<const VertexId> to) {
  std::vector<Distance> out;
  out.reserve(to.size());
  for (VertexId v : to) out.push_back(row.at(v));
  return out;
}

}  // namespace detail

/// Reverse-direction distance facts: the iff grid for every set vertex and
/// element block, the 3M^2 route for matching pairs, and sampled (x,y)-part,
/// z1 and y-part vertices that must cover nothing uncovered.
inline AuditReport discrimination_check(const ReducedInstance& r) {
  const Layout& L = r.layout;
  const int n = r.n();
  const std::int64_t M2 = r.M2();
  const UncoveredSets U = uncovered_sets(r);

  // Element side: per (part, a), the block plus q^part, with w's distances.
  struct Target {
    Part part;
    int a;
    VertexId w;
    std::vector<VertexId> probe;  // block vertices, then q^part
    std::vector<Distance> from_w;
  };
  std::vector<Target> targets;
  for (Part p : kParts) {
    for (int a = 1; a <= n; ++a) {
      Target t{p, a, L.element(p, a).w, U.element_blocks[index_of(p)][a - 1], {}};
      t.probe.push_back(L.at(CommonKind::Q, p));
      t.from_w = detail::restrict_row(bfs_distances(r.graph, t.w), t.probe);
      targets.push_back(std::move(t));
    }
  }
  // Block coverage of I(h, w): all, none or some of the block vertices.
  enum class Cover { None, Some, All };
  auto cover_of = [](const DistanceRow& row, const Target& t) {
    const Distance total = row.at(t.w);
    std::size_t hit = 0;
    for (std::size_t j = 0; j + 1 < t.probe.size(); ++j) hit += row.at(t.probe[j]) + t.from_w[j] == total ? 1 : 0;
    return hit == 0 ? Cover::None : hit + 1 == t.probe.size() ? Cover::All : Cover::Some;
  };

  FailureLog grid, route, xy, z1s;
  std::size_t grid_checked = 0, route_checked = 0, xy_checked = 0, z1_checked = 0;
  for (int i = 1; i <= n; ++i) {
    const auto& G = L.gadgets[i - 1];
    {
      const DistanceRow row = bfs_distances(r.graph, G.z1);
      for (const Target& t : targets) {
        ++z1_checked;
        if (cover_of(row, t) != Cover::None) {
          z1s.note("z1 of gadget " + std::to_string(i) + " covers " + std::string(part_name(t.part)) + std::to_string(t.a));
        }
      }
    }
    for (std::size_t s = 0; s < r.m(); ++s) {
      const std::string xs = "gadget " + std::to_string(i) + " x" + std::to_string(s + 1);
      const DistanceRow row = bfs_distances(r.graph, G.x[s]);
      for (const Target& t : targets) {
        const bool match = r.source.sets[s].coord(t.part) == t.a;
        const Cover c = cover_of(row, t);
        ++grid_checked;
        if (match ? c != Cover::All : c == Cover::All) {
          grid.note(xs + " vs " + std::string(part_name(t.part)) + std::to_string(t.a) +
                    (match ? " misses its block" : " covers a foreign block"));
        }
        if (match) {
          ++route_checked;
          const Distance total = row.at(t.w);
          const bool via_q = row.at(t.probe.back()) + t.from_w.back() == total;
          if (static_cast<std::int64_t>(total) != 3 * M2 || !via_q) {
            route.note(xs + " to w." + std::string(part_name(t.part)) + std::to_string(t.a) + " = " +
                       std::to_string(total) + (via_q ? "" : " not via q"));
          }
        }
      }
      const auto xy_path = path_between(r, G.x[s], G.y[s]);
      if (xy_path.empty()) {
        xy.note(xs + ": x-y path not found");
        continue;
      }
      const DistanceRow mid = bfs_distances(r.graph, xy_path[xy_path.size() / 2]);
      for (const Target& t : targets) {
        ++xy_checked;
        if (cover_of(mid, t) != Cover::None) {
          xy.note(xs + " (x,y) midpoint covers " + std::string(part_name(t.part)) + std::to_string(t.a));
        }
      }
    }
  }

  // y-part samples against Vg1 with every pendant as partner.
  const VertexSet P = pendant_vertices(r.graph);
  const VertexSet g1_gap = U.g1();
  std::vector<VertexId> samples;
  std::vector<std::string> sample_names;
  for (int i = 1; i <= n; ++i) {
    const auto& G = L.gadgets[i - 1];
    for (std::size_t s = 0; s < r.m(); ++s) {
      const VertexId y = G.y[s];
      const std::string ys = "gadget " + std::to_string(i) + " y" + std::to_string(s + 1);
      samples.push_back(y);
      sample_names.push_back(ys);
      for (VertexId w : r.graph.neighbors(y)) {
        if (r.graph.degree(w) == 1) {
          samples.push_back(w);
          sample_names.push_back(ys + " pendant");
        }
      }
      for (VertexId end : {L.at(CommonKind::G4), L.at(CommonKind::G2)}) {
        const auto path = path_between(r, y, end);
        if (path.empty()) continue;
        samples.push_back(path[path.size() / 2]);
        sample_names.push_back(ys + (end == L.at(CommonKind::G4) ? " y-g4 midpoint" : " y-g2 midpoint"));
      }
    }
  }
  std::vector<std::vector<Distance>> sample_gap, sample_to_p;
  for (VertexId h : samples) {
    const DistanceRow row = bfs_distances(r.graph, h);
    sample_gap.push_back(detail::restrict_row(row, g1_gap));
    sample_to_p.push_back(detail::restrict_row(row, P));
  }
  FailureLog ypart;
  std::size_t y_checked = 0;
  std::vector<std::uint8_t> sample_failed(samples.size(), 0);
  for (std::size_t pi = 0; pi < P.size(); ++pi) {
    const DistanceRow row = bfs_distances(r.graph, P[pi]);
    const auto to_gap = detail::restrict_row(row, g1_gap);
    for (std::size_t h = 0; h < samples.size(); ++h) {
      ++y_checked;
      const Distance total = sample_to_p[h][pi];
      for (std::size_t j = 0; j < g1_gap.size(); ++j) {
        if (sample_gap[h][j] + to_gap[j] == total) {
          if (!sample_failed[h]) ypart.note(sample_names[h] + " covers Vg1 with pendant " + std::to_string(P[pi]));
          sample_failed[h] = 1;
          break;
        }
      }
    }
  }

  AuditReport out;
  out.add("discrimination iff grid", grid.empty(), grid.summary(grid_checked));
  out.add("matched route length 3M^2 via q", route.empty(), route.summary(route_checked));
  out.add("(x,y)-part midpoints cover no element block", xy.empty(), xy.summary(xy_checked));
  out.add("z1 covers no element block", z1s.empty(), z1s.summary(z1_checked));
  out.add("y-part samples cover no Vg1 vertex", ypart.empty(), ypart.summary(y_checked));
  return out;
}

/// P together with the set vertex of the i-th chosen set in gadget i.
/// `solution` holds 1-based set indices and must be an exact cover.
inline VertexSet forward_witness(const ReducedInstance& r, const std::vector<int>& solution) {
  if (!is_exact_cover(r.source, solution)) throw std::invalid_argument("solution is not an exact cover");
  VertexSet out = pendant_vertices(r.graph);
  for (std::size_t i = 0; i < solution.size(); ++i) out.push_back(r.layout.gadgets[i].x[solution[i] - 1]);
  return make_vertex_set(std::move(out));
}

struct StructuredDecision {
  bool feasible = false;
  std::vector<int> choice;  // 1-based set index per gadget
  std::uint64_t combinations = 0;
};

/// Decides whether some P u {one set vertex per gadget} is geodetic, by
/// exhausting the m^n choices. Only the gap V - I(P) needs re-checking.
inline StructuredDecision structured_decide(const ReducedInstance& r) {
  const int n = r.n();
  const std::size_t m = r.m();
  const VertexSet P = pendant_vertices(r.graph);
  const auto base = interval_mask(r.graph, P);
  VertexSet open;
  for (VertexId v : r.graph.vertices()) {
    if (!base[v]) open.push_back(v);
  }

  // rows restricted to the open vertices and to all generators
  std::vector<VertexId> xs;
  for (const auto& G : r.layout.gadgets) xs.insert(xs.end(), G.x.begin(), G.x.end());
  std::vector<VertexId> gens = P;
  gens.insert(gens.end(), xs.begin(), xs.end());
  struct Cut {
    std::vector<Distance> open;
    std::vector<Distance> gens;
  };
  auto cut = [&](VertexId v) {
    const DistanceRow row = bfs_distances(r.graph, v);
    return Cut{detail::restrict_row(row, open), detail::restrict_row(row, gens)};
  };
  std::vector<Cut> p_rows, x_rows;
  for (VertexId p : P) p_rows.push_back(cut(p));
  for (VertexId x : xs) x_rows.push_back(cut(x));

  StructuredDecision out;
  std::vector<std::size_t> pick(n, 0);  // 0-based set index per gadget
  while (true) {
    ++out.combinations;
    std::vector<std::size_t> chosen;  // indices into xs
    for (int i = 0; i < n; ++i) chosen.push_back(static_cast<std::size_t>(i) * m + pick[i]);
    bool all = true;
    for (std::size_t j = 0; j < open.size() && all; ++j) {
      bool hit = false;
      for (std::size_t a = 0; a < chosen.size() && !hit; ++a) {
        const Cut& cx = x_rows[chosen[a]];
        for (std::size_t t = 0; t < P.size() && !hit; ++t) hit = cx.open[j] + p_rows[t].open[j] == cx.gens[t];
        for (std::size_t b = a; b < chosen.size() && !hit; ++b) {
          hit = cx.open[j] + x_rows[chosen[b]].open[j] == cx.gens[P.size() + chosen[b]];
        }
      }
      all = hit;
    }
    if (all) {
      out.feasible = true;
      for (std::size_t p : pick) out.choice.push_back(static_cast<int>(p) + 1);
      return out;
    }
    int i = n - 1;
    while (i >= 0 && pick[i] + 1 == m) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

/// Thirteen stationary searchers on the commons; the remaining forest is swept
/// component by component, element gadgets before set gadgets.
inline MixedSearchStrategy mixed_search_strategy(const ReducedInstance& r) {
  std::vector<VertexId> roots;
  for (Part p : kParts) {
    for (int a = 1; a <= r.n(); ++a) roots.push_back(r.layout.element(p, a).w);
  }
  for (const auto& G : r.layout.gadgets) roots.push_back(G.z1);
  const VertexSet commons = r.commons();
  return anchored_forest_strategy(r.graph, commons, roots);
}

inline void write_reduced_instance(std::ostream& out, const ReducedInstance& r) {
  const Graph& g = r.graph;
  out << "g " << g.id_bound() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](VertexId u, VertexId v) { out << "e " << u << ' ' << v << '\n'; });
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    if (g.has_vertex(v)) out << "r " << v << ' ' << format_role(r.roles[v]) << '\n';
  }
  for (const Triple& t : r.source.sets) out << "set " << t.a << ' ' << t.b << ' ' << t.c << '\n';
  out << "param n " << r.n() << '\n'
      << "param M " << r.params.M << '\n'
      << "param epsilon " << r.params.epsilon.str() << '\n'
      << "param strict " << (r.params.strict ? 1 : 0) << '\n'
      << "k " << r.k << '\n';
}

inline ReducedInstance reduced_instance_from(GraphDocument doc) {
  auto need = [&](std::string_view name) {
    auto v = doc.param(name);
    if (!v) throw RoleError("reduced instance lacks 'param " + std::string(name) + "'");
    return *v;
  };
  ReducedInstance r;
  const auto n = detail::to_int<int>(need("n"));
  const auto M = detail::to_int<std::int64_t>(need("M"));
  if (!n || !M) throw ParseError("bad numeric parameter");
  r.params.M = *M;
  if (auto eps = doc.param("epsilon")) r.params.epsilon = Rational::parse(*eps);
  if (auto strict = doc.param("strict")) r.params.strict = *strict == "1";
  r.source.n = *n;
  r.source.sets = doc.sets;
  r.source.validate();
  if (!doc.k) throw RoleError("reduced instance lacks the 'k' trailer");
  r.k = *doc.k;
  r.roles.assign(doc.graph.id_bound(), RoleTag{});
  for (VertexId v : doc.graph.vertices()) {
    auto it = doc.roles.find(v);
    if (it == doc.roles.end()) throw RoleError("missing role for vertex " + std::to_string(v));
    auto tag = parse_role(it->second);
    if (!tag) throw ParseError("bad role '" + it->second + "'");
    r.roles[v] = *tag;
  }
  r.layout = build_layout(r.roles, r.n(), r.m());
  r.graph = std::move(doc.graph);
  return r;
}

inline ReducedInstance read_reduced_instance(std::istream& in) { return reduced_instance_from(read_edge_list(in)); }

}  // namespace geoset
