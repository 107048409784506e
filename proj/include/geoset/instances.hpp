#pragma once

// Source problems of the two reductions: 3-Dimensional Matching over
// {alpha, beta, gamma} x [n] and Exact-3-Partitioned-3-SAT. Text formats,
// seeded generators and exhaustive oracles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geoset {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The three coordinates of the universe and the three variable parts.
enum class Part : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };
inline constexpr std::array<Part, 3> kParts = {Part::Alpha, Part::Beta, Part::Gamma};

inline std::string_view part_name(Part p) {
  switch (p) {
    case Part::Alpha: return "alpha";
    case Part::Beta: return "beta";
    case Part::Gamma: return "gamma";
  }
  return "?";
}

inline std::optional<Part> parse_part(std::string_view s) {
  for (Part p : kParts) {
    if (part_name(p) == s) return p;
  }
  return std::nullopt;
}

inline std::size_t index_of(Part p) { return static_cast<std::size_t>(p); }

// ---------------------------------------------------------------------------
// 3-Dimensional Matching

/// {(alpha, a), (beta, b), (gamma, c)}, all 1-based.
struct Triple {
  int a = 1;
  int b = 1;
  int c = 1;

  [[nodiscard]] int coord(Part p) const { return p == Part::Alpha ? a : p == Part::Beta ? b : c; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct ThreeDMInstance {
  int n = 0;
  std::vector<Triple> sets;

  [[nodiscard]] std::size_t m() const { return sets.size(); }
  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;

  void validate() const {
    if (n < 1) throw std::invalid_argument("3DM instance needs n >= 1");
    if (sets.empty()) throw std::invalid_argument("3DM instance needs at least one set");
    for (std::size_t s = 0; s < sets.size(); ++s) {
      for (Part p : kParts) {
        const int v = sets[s].coord(p);
        if (v < 1 || v > n) {
          throw std::invalid_argument("set " + std::to_string(s + 1) + " has " + std::string(part_name(p)) +
                                      " coordinate " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        }
      }
    }
  }
};

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

template <typename... Ts>
void read_fields(const std::string& line, std::size_t lineno, Ts&... out) {
  std::istringstream ss(line);
  ((ss >> out), ...);
  std::string rest;
  if (!ss || (ss >> rest)) throw ParseError("line " + std::to_string(lineno) + ": malformed '" + line + "'");
}

}  // namespace detail

inline ThreeDMInstance parse_3dm(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError("empty 3DM input");
  std::string tag;
  int n = 0;
  std::size_t m = 0;
  detail::read_fields(lines[0], 1, tag, n, m);
  if (tag != "3dm") throw ParseError("3DM input must start with '3dm <n> <m>'");
  if (lines.size() != m + 1) {
    throw ParseError("expected " + std::to_string(m) + " set lines, found " + std::to_string(lines.size() - 1));
  }
  ThreeDMInstance inst;
  inst.n = n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Triple t;
    detail::read_fields(lines[i], i + 1, t.a, t.b, t.c);
    inst.sets.push_back(t);
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

inline std::string format_3dm(const ThreeDMInstance& inst) {
  std::ostringstream out;
  out << "3dm " << inst.n << ' ' << inst.m() << '\n';
  for (const Triple& t : inst.sets) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

inline constexpr int kThreeDMOracleMaxN = 6;
inline constexpr std::size_t kThreeDMOracleMaxM = 20;

/// Backtracking exact cover. Returns n set indices (1-based, ascending) that
/// partition the universe, or nothing.
inline std::optional<std::vector<int>> solve_3dm_bruteforce(const ThreeDMInstance& inst, int max_n = kThreeDMOracleMaxN,
                                                            std::size_t max_m = kThreeDMOracleMaxM) {
  inst.validate();
  if (inst.n > max_n || inst.m() > max_m) throw std::invalid_argument("3DM instance exceeds the oracle cap");
  const int n = inst.n;
  std::vector<std::uint8_t> used_b(n + 1, 0), used_c(n + 1, 0);
  std::vector<int> chosen;
  // Element (alpha, a) must be covered by exactly one set; assign a = 1..n in order.
  auto rec = [&](auto&& self, int a) -> bool {
    if (a > n) return true;
    for (std::size_t s = 0; s < inst.m(); ++s) {
      const Triple& t = inst.sets[s];
      if (t.a != a || used_b[t.b] || used_c[t.c]) continue;
      used_b[t.b] = used_c[t.c] = 1;
      chosen.push_back(static_cast<int>(s) + 1);
      if (self(self, a + 1)) return true;
      chosen.pop_back();
      used_b[t.b] = used_c[t.c] = 0;
    }
    return false;
  };
  if (!rec(rec, 1)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// Checks that the 1-based indices pick n sets partitioning the universe.
inline bool is_exact_cover(const ThreeDMInstance& inst, const std::vector<int>& picks) {
  if (picks.size() != static_cast<std::size_t>(inst.n)) return false;
  std::array<std::vector<std::uint8_t>, 3> hit;
  for (auto& h : hit) h.assign(inst.n + 1, 0);
  for (int s : picks) {
    if (s < 1 || static_cast<std::size_t>(s) > inst.m()) return false;
    for (Part p : kParts) {
      auto& slot = hit[index_of(p)][inst.sets[s - 1].coord(p)];
      if (slot) return false;
      slot = 1;
    }
  }
  return true;
}

/// n disjoint triples from two random permutations, shuffled in among m - n
/// uniformly random distractors.
inline ThreeDMInstance gen_planted_3dm(int n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("planted 3DM needs n >= 1");
  if (m < static_cast<std::size_t>(n)) throw std::invalid_argument("planted 3DM needs m >= n");
  std::mt19937_64 rng(seed);
  std::vector<int> pb(n), pc(n);
  for (int i = 0; i < n; ++i) pb[i] = pc[i] = i + 1;
  std::shuffle(pb.begin(), pb.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  ThreeDMInstance inst;
  inst.n = n;
  for (int i = 0; i < n; ++i) inst.sets.push_back({i + 1, pb[i], pc[i]});
  std::uniform_int_distribution<int> coord(1, n);
  while (inst.sets.size() < m) inst.sets.push_back({coord(rng), coord(rng), coord(rng)});
  std::shuffle(inst.sets.begin(), inst.sets.end(), rng);
  return inst;
}

inline constexpr int kRejectionBudget = 10000;

/// Random instance certified unsolvable by the exact-cover oracle. With m = 0
/// the number of sets is drawn from [n, 2n].
inline ThreeDMInstance gen_no_3dm(int n, std::uint64_t seed, std::size_t m = 0) {
  if (n < 2) throw std::invalid_argument("every instance with n = 1 is solvable; no-instances need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(1, n);
  std::uniform_int_distribution<std::size_t> count(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    ThreeDMInstance inst;
    inst.n = n;
    const std::size_t sets = m == 0 ? count(rng) : m;
    for (std::size_t s = 0; s < sets; ++s) inst.sets.push_back({coord(rng), coord(rng), coord(rng)});
    if (!solve_3dm_bruteforce(inst)) return inst;
  }
  throw std::runtime_error("rejection budget exhausted while sampling a 3DM no-instance");
}

// ---------------------------------------------------------------------------
// Exact-3-Partitioned-3-SAT

struct Literal {
  int var = 1;  // 1-based within its part
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Literal k of a clause belongs to part kParts[k].
using Clause = std::array<Literal, 3>;

struct E3P3Formula {
  int n = 0;  // variables per part
  std::vector<Clause> clauses;

  [[nodiscard]] std::size_t m() const { return clauses.size(); }
  friend bool operator==(const E3P3Formula&, const E3P3Formula&) = default;

  void validate() const {
    if (n < 1) throw std::invalid_argument("E3P3 formula needs n >= 1");
    for (std::size_t q = 0; q < clauses.size(); ++q) {
      for (Part p : kParts) {
        const int v = clauses[q][index_of(p)].var;
        if (v < 1 || v > n) {
          throw std::invalid_argument("clause " + std::to_string(q + 1) + " has " + std::string(part_name(p)) +
                                      " variable " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        }
      }
    }
  }
};

/// values[part][var - 1]
struct Assignment {
  std::array<std::vector<bool>, 3> values;

  [[nodiscard]] bool value(Part p, int var) const { return values[index_of(p)][var - 1]; }
  [[nodiscard]] bool satisfies(const Literal& lit, Part p) const { return value(p, lit.var) == lit.positive; }
};

inline bool satisfies(const E3P3Formula& f, const Assignment& a) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Part p : kParts) sat = sat || a.satisfies(c[index_of(p)], p);
    if (!sat) return false;
  }
  return true;
}

inline E3P3Formula parse_e3p3(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError("empty E3P3 input");
  std::string tag;
  int n = 0;
  std::size_t m = 0;
  detail::read_fields(lines[0], 1, tag, n, m);
  if (tag != "e3p3") throw ParseError("E3P3 input must start with 'e3p3 <n> <m>'");
  if (lines.size() != m + 1) {
    throw ParseError("expected " + std::to_string(m) + " clause lines, found " + std::to_string(lines.size() - 1));
  }
  E3P3Formula f;
  f.n = n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::array<int, 3> raw{};
    detail::read_fields(lines[i], i + 1, raw[0], raw[1], raw[2]);
    Clause c;
    for (std::size_t k = 0; k < 3; ++k) {
      if (raw[k] == 0) throw ParseError("line " + std::to_string(i + 1) + ": literal 0 is not allowed");
      c[k] = {raw[k] < 0 ? -raw[k] : raw[k], raw[k] > 0};
    }
    f.clauses.push_back(c);
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return f;
}

inline std::string format_e3p3(const E3P3Formula& f) {
  std::ostringstream out;
  out << "e3p3 " << f.n << ' ' << f.m() << '\n';
  for (const Clause& c : f.clauses) {
    for (std::size_t k = 0; k < 3; ++k) out << (k ? " " : "") << (c[k].positive ? c[k].var : -c[k].var);
    out << '\n';
  }
  return out.str();
}

inline E3P3Formula gen_e3p3(int n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("E3P3 formula needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n);
  std::bernoulli_distribution sign(0.5);
  E3P3Formula f;
  f.n = n;
  for (std::size_t q = 0; q < m; ++q) {
    Clause c;
    for (auto& lit : c) lit = {var(rng), sign(rng)};
    f.clauses.push_back(c);
  }
  return f;
}

inline constexpr int kSatOracleMaxVariables = 24;

/// Exhaustive over all 2^(3n) assignments.
inline std::optional<Assignment> solve_sat_bruteforce(const E3P3Formula& f) {
  f.validate();
  if (3 * f.n > kSatOracleMaxVariables) throw std::invalid_argument("formula exceeds the SAT oracle cap");
  const int n = f.n;
  const std::uint64_t total = std::uint64_t{1} << (3 * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment a;
    for (Part p : kParts) {
      auto& vals = a.values[index_of(p)];
      vals.resize(n);
      for (int i = 0; i < n; ++i) vals[i] = (bits >> (index_of(p) * n + i)) & 1u;
    }
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace geoset
