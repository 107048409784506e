#pragma once

// Text edge-list format plus DOT and GraphML exporters.
//
//   g <numVertices> <numEdges>
//   e <u> <v>               (0-based ids, one line per edge)
//   r <u> <roleTag>         (optional)
//   k <value>               (optional trailer)
//   param <name> <value>    (optional trailer)
//   set <a> <b> <c>         (optional trailer: source 3DM family)
//
// Lines starting with '#' are comments.

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoset/graph.hpp"
#include "geoset/instances.hpp"

namespace geoset {

struct GraphDocument {
  Graph graph;
  std::map<VertexId, std::string> roles;
  std::optional<std::int64_t> k;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Triple> sets;

  [[nodiscard]] std::optional<std::string> param(std::string_view name) const {
    for (const auto& [key, value] : params) {
      if (key == name) return value;
    }
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_number(std::string_view s, std::size_t lineno) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(lineno) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline GraphDocument read_edge_list(std::istream& in) {
  GraphDocument doc;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string_view tag = tok[0];
    auto expect = [&](std::size_t count) {
      if (tok.size() != count) throw ParseError("line " + std::to_string(lineno) + ": malformed '" + line + "'");
    };
    if (tag == "g") {
      expect(3);
      if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
      doc.graph = Graph(detail::parse_number<std::size_t>(tok[1], lineno));
      declared_edges = detail::parse_number<std::size_t>(tok[2], lineno);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": expected 'g <numVertices> <numEdges>' first");
    if (tag == "e") {
      expect(3);
      const auto u = detail::parse_number<VertexId>(tok[1], lineno);
      const auto v = detail::parse_number<VertexId>(tok[2], lineno);
      try {
        doc.graph.add_edge(u, v);
      } catch (const GraphError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else if (tag == "r") {
      expect(3);
      const auto u = detail::parse_number<VertexId>(tok[1], lineno);
      if (!doc.graph.has_vertex(u)) throw ParseError("line " + std::to_string(lineno) + ": role for missing vertex");
      doc.roles[u] = std::string(tok[2]);
    } else if (tag == "k") {
      expect(2);
      doc.k = detail::parse_number<std::int64_t>(tok[1], lineno);
    } else if (tag == "param") {
      expect(3);
      doc.params.emplace_back(std::string(tok[1]), std::string(tok[2]));
    } else if (tag == "set") {
      expect(4);
      doc.sets.push_back({detail::parse_number<int>(tok[1], lineno), detail::parse_number<int>(tok[2], lineno),
                          detail::parse_number<int>(tok[3], lineno)});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + std::string(tag) + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'g' header");
  if (doc.graph.edge_count() != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(doc.graph.edge_count()));
  }
  return doc;
}

/// Retired ids are written as isolated vertices.
inline void write_edge_list(std::ostream& out, const GraphDocument& doc) {
  const Graph& g = doc.graph;
  out << "g " << g.id_bound() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](VertexId u, VertexId v) { out << "e " << u << ' ' << v << '\n'; });
  for (const auto& [v, role] : doc.roles) out << "r " << v << ' ' << role << '\n';
  for (const Triple& t : doc.sets) out << "set " << t.a << ' ' << t.b << ' ' << t.c << '\n';
  for (const auto& [key, value] : doc.params) out << "param " << key << ' ' << value << '\n';
  if (doc.k) out << "k " << *doc.k << '\n';
}

inline bool same_graph(const Graph& a, const Graph& b) {
  if (a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return false;
  for (VertexId v : a.vertices()) {
    if (neighbors(a, v) != neighbors(b, v)) return false;
  }
  return true;
}

namespace detail {

/// Fill colour by role family (the text before the first ':').
inline std::string_view role_color(std::string_view role) {
  const auto family = role.substr(0, role.find(':'));
  if (family == "common") return "grey70";
  if (family == "set") return "lightblue";
  if (family == "elem") return "palegreen";
  if (family == "pendant") return "white";
  if (family == "lit") return "khaki";
  if (family == "occ") return "plum";
  return "whitesmoke";
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline void write_dot(std::ostream& out, const GraphDocument& doc) {
  const Graph& g = doc.graph;
  out << "graph G {\n  node [shape=circle, style=filled, fillcolor=whitesmoke];\n";
  for (const auto& [v, role] : doc.roles) {
    if (!g.has_vertex(v)) continue;
    out << "  " << v << " [role=\"" << role << "\", fillcolor=\"" << detail::role_color(role) << "\"];\n";
  }
  for (VertexId v : g.vertices()) {
    if (!doc.roles.contains(v) && g.degree(v) == 0) out << "  " << v << ";\n";
  }
  g.for_each_edge([&](VertexId u, VertexId v) { out << "  " << u << " -- " << v << ";\n"; });
  out << "}\n";
}

inline void write_graphml(std::ostream& out, const GraphDocument& doc) {
  const Graph& g = doc.graph;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
      << "  <key id=\"family\" for=\"node\" attr.name=\"family\" attr.type=\"string\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (VertexId v : g.vertices()) {
    out << "    <node id=\"n" << v << "\"";
    auto it = doc.roles.find(v);
    if (it == doc.roles.end()) {
      out << "/>\n";
      continue;
    }
    const std::string_view role = it->second;
    out << ">\n      <data key=\"role\">" << detail::xml_escape(role) << "</data>\n"
        << "      <data key=\"family\">" << detail::xml_escape(role.substr(0, role.find(':'))) << "</data>\n"
        << "    </node>\n";
  }
  std::size_t e = 0;
  g.for_each_edge([&](VertexId u, VertexId v) {
    out << "    <edge id=\"e" << e++ << "\" source=\"n" << u << "\" target=\"n" << v << "\"/>\n";
  });
  out << "  </graph>\n</graphml>\n";
}

}  // namespace geoset
