#pragma once

// Exact-3-Partitioned-3-SAT to Vertex Cover: literal pairs joined by matching
// edges, one triangle of occurrence vertices per clause, and links from each
// occurrence to its literal. Satisfiable iff vc(H) <= 3n + 2m.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoset/graph.hpp"
#include "geoset/graph_io.hpp"
#include "geoset/instances.hpp"
#include "geoset/roles.hpp"

namespace geoset {

struct SatVcInstance {
  Graph graph;
  std::int64_t k = 0;
  std::vector<RoleTag> roles;
  E3P3Formula source;

  [[nodiscard]] VertexId literal(Part p, int var, bool positive) const {
    return static_cast<VertexId>(2 * (index_of(p) * source.n + (var - 1)) + (positive ? 0 : 1));
  }
  /// Occurrence vertex of the part-p literal of clause q (0-based).
  [[nodiscard]] VertexId occurrence(std::size_t q, Part p) const {
    return static_cast<VertexId>(6 * source.n + 3 * q + index_of(p));
  }
};

inline SatVcInstance reduce_e3p3sat_to_vc(const E3P3Formula& f) {
  f.validate();
  SatVcInstance out;
  out.source = f;
  const int n = f.n;
  const std::size_t m = f.m();
  out.graph = Graph(6 * static_cast<std::size_t>(n) + 3 * m);
  out.roles.resize(out.graph.id_bound());
  for (Part p : kParts) {
    for (int i = 1; i <= n; ++i) {
      for (bool pos : {true, false}) out.roles[out.literal(p, i, pos)] = role::LiteralVertex{p, i, pos};
      out.graph.add_edge(out.literal(p, i, true), out.literal(p, i, false));
    }
  }
  for (std::size_t q = 0; q < m; ++q) {
    for (Part p : kParts) {
      const Literal& lit = f.clauses[q][index_of(p)];
      const VertexId occ = out.occurrence(q, p);
      out.roles[occ] = role::Occurrence{static_cast<int>(q + 1), p, lit.var, lit.positive};
      out.graph.add_edge(occ, out.literal(p, lit.var, lit.positive));
    }
    out.graph.add_edge(out.occurrence(q, Part::Alpha), out.occurrence(q, Part::Beta));
    out.graph.add_edge(out.occurrence(q, Part::Beta), out.occurrence(q, Part::Gamma));
    out.graph.add_edge(out.occurrence(q, Part::Alpha), out.occurrence(q, Part::Gamma));
  }
  out.k = 3LL * n + 2LL * static_cast<std::int64_t>(m);
  return out;
}

/// The true literal vertices plus, per clause, the two occurrences other than
/// its first satisfied literal.
inline VertexSet sat_vc_witness(const SatVcInstance& h, const Assignment& a) {
  const E3P3Formula& f = h.source;
  if (!satisfies(f, a)) throw std::invalid_argument("assignment does not satisfy the formula");
  VertexSet out;
  for (Part p : kParts) {
    for (int i = 1; i <= f.n; ++i) out.push_back(h.literal(p, i, a.value(p, i)));
  }
  for (std::size_t q = 0; q < f.m(); ++q) {
    Part chosen = Part::Alpha;
    for (Part p : kParts) {
      if (a.satisfies(f.clauses[q][index_of(p)], p)) {
        chosen = p;
        break;
      }
    }
    for (Part p : kParts) {
      if (p != chosen) out.push_back(h.occurrence(q, p));
    }
  }
  return make_vertex_set(std::move(out));
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  std::vector<std::uint8_t> in(g.id_bound(), 0);
  for (VertexId v : cover) {
    if (v < in.size()) in[v] = 1;
  }
  bool ok = true;
  g.for_each_edge([&](VertexId u, VertexId v) { ok = ok && (in[u] || in[v]); });
  return ok;
}

inline GraphDocument to_document(const SatVcInstance& h) {
  GraphDocument doc;
  doc.graph = h.graph;
  for (VertexId v : h.graph.vertices()) doc.roles[v] = format_role(h.roles[v]);
  doc.params.emplace_back("n", std::to_string(h.source.n));
  doc.params.emplace_back("m", std::to_string(h.source.m()));
  doc.k = h.k;
  return doc;
}

}  // namespace geoset
