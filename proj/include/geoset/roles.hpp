#pragma once

// Role tags recording which gadget part each vertex of a reduced instance
// plays, with a compact one-token text encoding used by the role lines of the
// edge-list format.

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geoset/graph.hpp"
#include "geoset/instances.hpp"

namespace geoset {

/// g1..g4 followed by p/q/r for alpha, beta, gamma: 13 slots.
enum class CommonKind : std::uint8_t { G1, G2, G3, G4, P, Q, R };

struct CommonSlot {
  CommonKind kind = CommonKind::G1;
  Part part = Part::Alpha;  // only meaningful for P, Q, R

  friend bool operator==(const CommonSlot&, const CommonSlot&) = default;

  [[nodiscard]] std::size_t index() const {
    const auto k = static_cast<std::size_t>(kind);
    return k < 4 ? k : 4 + 3 * index_of(part) + (k - 4);
  }

  static CommonSlot from_index(std::size_t i) {
    if (i < 4) return {static_cast<CommonKind>(i), Part::Alpha};
    return {static_cast<CommonKind>(4 + (i - 4) % 3), kParts[(i - 4) / 3]};
  }
};

inline constexpr std::size_t kCommonCount = 13;

inline std::string common_name(CommonSlot s) {
  static constexpr std::array<std::string_view, 7> names = {"g1", "g2", "g3", "g4", "p", "q", "r"};
  std::string out(names[static_cast<std::size_t>(s.kind)]);
  if (s.kind >= CommonKind::P) out += "." + std::string(part_name(s.part));
  return out;
}

namespace role {

struct Common {
  CommonSlot slot;
  friend bool operator==(const Common&, const Common&) = default;
};

enum class SetPart : std::uint8_t { X, Y, Z1, Z2, Branch };

/// Part of set-encoding gadget `gadget` (1-based). X, Y and Branch carry the
/// 1-based set index; Branch also names the common vertex its path leads to.
struct SetGadget {
  int gadget = 1;
  SetPart part = SetPart::X;
  int set = 0;
  CommonSlot target{};
  friend bool operator==(const SetGadget&, const SetGadget&) = default;
};

enum class ElementPart : std::uint8_t { U, V, W, QNeighbor };

/// Vertex of the element-encoding gadget for (symbol, index).
struct ElementGadget {
  ElementPart part = ElementPart::U;
  Part symbol = Part::Alpha;
  int index = 1;
  friend bool operator==(const ElementGadget&, const ElementGadget&) = default;
};

/// Interior vertex of the fresh path joining `from` and `to`.
struct PathInternal {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const PathInternal&, const PathInternal&) = default;
};

struct Pendant {
  VertexId of = 0;
  friend bool operator==(const Pendant&, const Pendant&) = default;
};

/// Variable-side vertex x^part_{var, t|f} of the SAT to vertex cover graph.
struct LiteralVertex {
  Part part = Part::Alpha;
  int var = 1;
  bool positive = true;
  friend bool operator==(const LiteralVertex&, const LiteralVertex&) = default;
};

/// Clause-side occurrence vertex of clause `clause` (1-based).
struct Occurrence {
  int clause = 1;
  Part part = Part::Alpha;
  int var = 1;
  bool positive = true;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

}  // namespace role

using RoleTag = std::variant<std::monostate, role::Common, role::SetGadget, role::ElementGadget, role::PathInternal,
                             role::Pendant, role::LiteralVertex, role::Occurrence>;

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<CommonSlot> parse_common(std::string_view s) {
  for (std::size_t i = 0; i < kCommonCount; ++i) {
    const CommonSlot slot = CommonSlot::from_index(i);
    if (common_name(slot) == s) return slot;
  }
  return std::nullopt;
}

inline std::string_view polarity_name(bool positive) { return positive ? "t" : "f"; }

inline std::optional<bool> parse_polarity(std::string_view s) {
  if (s == "t") return true;
  if (s == "f") return false;
  return std::nullopt;
}

}  // namespace detail

inline std::string format_role(const RoleTag& tag) {
  using namespace role;
  struct Visitor {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const Common& c) const { return "common:" + common_name(c.slot); }
    std::string operator()(const SetGadget& s) const {
      const std::string head = "set:" + std::to_string(s.gadget) + ":";
      switch (s.part) {
        case SetPart::X: return head + "x:" + std::to_string(s.set);
        case SetPart::Y: return head + "y:" + std::to_string(s.set);
        case SetPart::Z1: return head + "z1";
        case SetPart::Z2: return head + "z2";
        case SetPart::Branch: return head + "branch:" + std::to_string(s.set) + ":" + common_name(s.target);
      }
      return head;
    }
    std::string operator()(const ElementGadget& e) const {
      static constexpr std::array<std::string_view, 4> names = {"u", "v", "w", "qn"};
      return "elem:" + std::string(part_name(e.symbol)) + ":" + std::to_string(e.index) + ":" +
             std::string(names[static_cast<std::size_t>(e.part)]);
    }
    std::string operator()(const PathInternal& p) const {
      return "path:" + std::to_string(p.from) + ":" + std::to_string(p.to);
    }
    std::string operator()(const Pendant& p) const { return "pendant:" + std::to_string(p.of); }
    std::string operator()(const LiteralVertex& l) const {
      return "lit:" + std::string(part_name(l.part)) + ":" + std::to_string(l.var) + ":" +
             std::string(detail::polarity_name(l.positive));
    }
    std::string operator()(const Occurrence& o) const {
      return "occ:" + std::to_string(o.clause) + ":" + std::string(part_name(o.part)) + ":" + std::to_string(o.var) +
             ":" + std::string(detail::polarity_name(o.positive));
    }
  };
  return std::visit(Visitor{}, tag);
}

inline std::optional<RoleTag> parse_role(std::string_view text) {
  using namespace role;
  using detail::to_int;
  const auto f = detail::split(text, ':');
  const std::string_view kind = f[0];
  if (kind == "none" && f.size() == 1) return RoleTag{};
  if (kind == "common" && f.size() == 2) {
    if (auto slot = detail::parse_common(f[1])) return Common{*slot};
    return std::nullopt;
  }
  if (kind == "set" && f.size() >= 3) {
    const auto gadget = to_int<int>(f[1]);
    if (!gadget) return std::nullopt;
    if (f.size() == 3 && f[2] == "z1") return SetGadget{*gadget, SetPart::Z1, 0, {}};
    if (f.size() == 3 && f[2] == "z2") return SetGadget{*gadget, SetPart::Z2, 0, {}};
    if (f.size() == 4 && (f[2] == "x" || f[2] == "y")) {
      const auto set = to_int<int>(f[3]);
      if (!set) return std::nullopt;
      return SetGadget{*gadget, f[2] == "x" ? SetPart::X : SetPart::Y, *set, {}};
    }
    if (f.size() == 5 && f[2] == "branch") {
      const auto set = to_int<int>(f[3]);
      const auto target = detail::parse_common(f[4]);
      if (!set || !target) return std::nullopt;
      return SetGadget{*gadget, SetPart::Branch, *set, *target};
    }
    return std::nullopt;
  }
  if (kind == "elem" && f.size() == 4) {
    const auto symbol = parse_part(f[1]);
    const auto index = to_int<int>(f[2]);
    if (!symbol || !index) return std::nullopt;
    static constexpr std::array<std::string_view, 4> names = {"u", "v", "w", "qn"};
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == f[3]) return ElementGadget{static_cast<ElementPart>(i), *symbol, *index};
    }
    return std::nullopt;
  }
  if (kind == "path" && f.size() == 3) {
    const auto from = to_int<VertexId>(f[1]);
    const auto to = to_int<VertexId>(f[2]);
    if (!from || !to) return std::nullopt;
    return PathInternal{*from, *to};
  }
  if (kind == "pendant" && f.size() == 2) {
    if (auto of = to_int<VertexId>(f[1])) return Pendant{*of};
    return std::nullopt;
  }
  if (kind == "lit" && f.size() == 4) {
    const auto part = parse_part(f[1]);
    const auto var = to_int<int>(f[2]);
    const auto pol = detail::parse_polarity(f[3]);
    if (!part || !var || !pol) return std::nullopt;
    return LiteralVertex{*part, *var, *pol};
  }
  if (kind == "occ" && f.size() == 5) {
    const auto clause = to_int<int>(f[1]);
    const auto part = parse_part(f[2]);
    const auto var = to_int<int>(f[3]);
    const auto pol = detail::parse_polarity(f[4]);
    if (!clause || !part || !var || !pol) return std::nullopt;
    return Occurrence{*clause, *part, *var, *pol};
  }
  return std::nullopt;
}

}  // namespace geoset
