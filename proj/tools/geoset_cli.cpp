// geoset: generate instances, run the reductions, solve, audit and export.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geoset/geodetic_solver.hpp"
#include "geoset/graph_io.hpp"
#include "geoset/instances.hpp"
#include "geoset/mixed_search.hpp"
#include "geoset/reduction_3dm.hpp"
#include "geoset/reduction_sat_vc.hpp"
#include "geoset/report.hpp"
#include "geoset/smd.hpp"

namespace {

using namespace geoset;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string join(const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + std::to_string(ids[i]);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
  return path.substr(0, dot) + ext;
}

struct GenerateArgs {
  std::string kind;
  int n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  bool no_instance = false;
  std::string out;
};

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string M = "auto";
  std::string epsilon = "1/100";
  bool audit = false;
  std::string out;
};

struct SolveArgs {
  std::string problem;
  std::string input;
  bool oracle = false;
};

struct VerifyArgs {
  std::string target;
  std::string input;
  std::string solution;
};

struct ExportArgs {
  std::string input;
  std::string format = "dot";
  std::string out;
};

void run_generate(const GenerateArgs& a, RunReport& report) {
  std::string text;
  if (a.kind == "3dm") {
    const std::size_t m = a.m ? a.m : static_cast<std::size_t>(a.n) + 1;
    const ThreeDMInstance inst = a.no_instance ? gen_no_3dm(a.n, a.seed, a.m) : gen_planted_3dm(a.n, m, a.seed);
    text = format_3dm(inst);
    report.value("n", std::to_string(inst.n));
    report.value("m", std::to_string(inst.m()));
    report.value("planted", a.no_instance ? "no" : "yes");
  } else {
    const std::size_t m = a.m ? a.m : 3;
    const E3P3Formula f = gen_e3p3(a.n, m, a.seed);
    text = format_e3p3(f);
    report.value("n", std::to_string(f.n));
    report.value("m", std::to_string(f.m()));
  }
  write_text(a.out, text);
  report.value("seed", std::to_string(a.seed));
  report.value("output", a.out);
}

void run_reduce(const ReduceArgs& a, RunReport& report) {
  const std::string bytes = read_file(a.input);
  report.input(a.input, bytes);
  std::istringstream in(bytes);
  const auto start = Clock::now();
  if (a.kind == "e3p3-vc") {
    const E3P3Formula f = parse_e3p3(in);
    const SatVcInstance h = reduce_e3p3sat_to_vc(f);
    const std::string out = a.out.empty() ? replace_extension(a.input, ".graph") : a.out;
    std::ostringstream text;
    write_edge_list(text, to_document(h));
    write_text(out, text.str());
    report.value("n", std::to_string(f.n));
    report.value("m", std::to_string(f.m()));
    report.value("vertices", std::to_string(h.graph.vertex_count()));
    report.value("edges", std::to_string(h.graph.edge_count()));
    report.value("k", std::to_string(h.k));
    report.value("output", out);
    if (a.audit) {
      const std::size_t n = static_cast<std::size_t>(f.n), m = f.m();
      report.check({"vertex count 6n + 3m", h.graph.vertex_count() == 6 * n + 3 * m,
                    std::to_string(h.graph.vertex_count())});
      report.check({"edge count 3n + 6m", h.graph.edge_count() == 3 * n + 6 * m, std::to_string(h.graph.edge_count())});
      report.check({"k = 3n + 2m", h.k == static_cast<std::int64_t>(3 * n + 2 * m), std::to_string(h.k)});
    }
    report.timing("reduce", since(start));
    return;
  }
  const ThreeDMInstance inst = parse_3dm(in);
  ReductionParams params;
  params.epsilon = Rational::parse(a.epsilon);
  if (a.M == "auto") {
    params.M = ReductionParams::strict_minimum(inst.n, params.epsilon);
  } else {
    const auto M = detail::to_int<std::int64_t>(a.M);
    if (!M) throw std::invalid_argument("--M expects an integer or 'auto'");
    params.M = *M;
  }
  params.strict = params.M >= ReductionParams::strict_minimum(inst.n, params.epsilon);
  report.value("n", std::to_string(inst.n));
  report.value("m", std::to_string(inst.m()));
  report.value("M", std::to_string(params.M));
  report.value("epsilon", params.epsilon.str());
  report.value("strict", params.strict ? "yes" : "no");
  const ReducedInstance r = reduce_3dm_to_geodetic(inst, params);
  const std::string out = a.out.empty() ? replace_extension(a.input, ".graph") : a.out;
  {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + out + "'");
    write_reduced_instance(file, r);
  }
  report.value("vertices", std::to_string(r.graph.vertex_count()));
  report.value("edges", std::to_string(r.graph.edge_count()));
  report.value("pendants", std::to_string(pendant_vertices(r.graph).size()));
  report.value("k", std::to_string(r.k));
  report.value("output", out);
  report.timing("reduce", since(start));
  if (a.audit) {
    const auto audit_start = Clock::now();
    report.checks(assert_construction(r));
    report.timing("audit", since(audit_start));
  }
}

void run_solve(const SolveArgs& a, RunReport& report) {
  const std::string bytes = read_file(a.input);
  report.input(a.input, bytes);
  std::istringstream in(bytes);
  const auto start = Clock::now();
  if (a.problem == "3dm") {
    const ThreeDMInstance inst = parse_3dm(in);
    const auto picks = solve_3dm_bruteforce(inst);
    report.value("exact_cover", picks ? "yes" : "no");
    if (picks) {
      report.value("witness", join_ints(*picks));
      if (a.oracle) report.check({"witness is an exact cover", is_exact_cover(inst, *picks)});
    }
    report.timing("solve", since(start));
    return;
  }
  if (a.problem == "sat") {
    const E3P3Formula f = parse_e3p3(in);
    const auto assignment = solve_sat_bruteforce(f);
    report.value("satisfiable", assignment ? "yes" : "no");
    if (assignment) {
      std::string text;
      for (Part p : kParts) {
        for (int i = 1; i <= f.n; ++i) {
          text += (text.empty() ? "" : " ") + std::string(part_name(p)) + std::to_string(i) + "=" +
                  (assignment->value(p, i) ? "1" : "0");
        }
      }
      report.value("witness", text);
      if (a.oracle) report.check({"assignment satisfies every clause", satisfies(f, *assignment)});
    }
    report.timing("solve", since(start));
    return;
  }

  const GraphDocument doc = read_edge_list(in);
  const Graph& g = doc.graph;
  report.value("vertices", std::to_string(g.vertex_count()));
  report.value("edges", std::to_string(g.edge_count()));
  if (a.problem == "geodetic") {
    const GeodeticSolution sol = min_geodetic(g);
    report.value("value", std::to_string(sol.size));
    report.value("witness", join(sol.set));
    report.value("nodes", std::to_string(sol.stats.nodes));
    report.check({"witness is geodetic", is_geodetic(g, sol.set).geodetic});
    if (a.oracle) {
      const GeodeticSolution oracle = min_geodetic_bruteforce(g);
      report.value("oracle_value", std::to_string(oracle.size));
      report.check({"oracle agrees", oracle.size == sol.size});
    }
  } else if (a.problem == "smd") {
    const StrongMetricDimension smd = strong_metric_dimension(g);
    report.value("value", std::to_string(smd.value));
    report.value("witness", join(smd.resolving_set));
    if (a.oracle) {
      const VertexSet oracle = min_strong_resolving_bruteforce(g);
      report.value("oracle_value", std::to_string(oracle.size()));
      report.check({"oracle agrees", oracle.size() == smd.value});
    }
  } else if (a.problem == "vc") {
    const VertexSet cover = min_vertex_cover(g);
    report.value("value", std::to_string(cover.size()));
    report.value("witness", join(cover));
    report.check({"witness covers every edge", is_vertex_cover(g, cover)});
    if (doc.k) {
      report.value("k", std::to_string(*doc.k));
      report.value("within_k", static_cast<std::int64_t>(cover.size()) <= *doc.k ? "yes" : "no");
    }
    if (a.oracle) {
      const VertexSet oracle = min_vertex_cover_bruteforce(g);
      report.value("oracle_value", std::to_string(oracle.size()));
      report.check({"oracle agrees", oracle.size() == cover.size()});
    }
  } else {
    throw std::invalid_argument("unknown problem '" + a.problem + "'");
  }
  report.timing("solve", since(start));
}

std::vector<int> parse_solution(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = detail::to_int<int>(item);
    if (!v) throw std::invalid_argument("--solution expects comma-separated set indices");
    out.push_back(*v);
  }
  return out;
}

void run_verify(const VerifyArgs& a, RunReport& report) {
  const std::string bytes = read_file(a.input);
  report.input(a.input, bytes);
  std::istringstream in(bytes);
  const auto load_start = Clock::now();
  const ReducedInstance r = read_reduced_instance(in);
  report.timing("load", since(load_start));
  report.value("n", std::to_string(r.n()));
  report.value("m", std::to_string(r.m()));
  report.value("M", std::to_string(r.params.M));
  report.value("k", std::to_string(r.k));
  const auto start = Clock::now();
  if (a.target == "pendant-cover") {
    const UncoveredSets U = uncovered_sets(r);
    report.value("Vg1", std::to_string(U.g1().size()));
    for (Part p : kParts) report.value("V" + std::string(part_name(p)), std::to_string(U.part(p).size()));
    report.check(pendant_cover_check(r));
  } else if (a.target == "discrimination") {
    report.checks(discrimination_check(r));
  } else if (a.target == "fvs13") {
    report.check(fvs13_check(r));
  } else if (a.target == "mixed-search") {
    const MixedSearchStrategy s = mixed_search_strategy(r);
    const SearchVerdict v = simulate_mixed_search(r.graph, s);
    report.value("ops", std::to_string(s.ops.size()));
    report.value("budget", std::to_string(s.budget));
    report.value("maxSearchers", std::to_string(v.max_simultaneous));
    report.value("allCleared", v.all_cleared ? "true" : "false");
    report.check({"all edges cleared", v.all_cleared,
                  std::to_string(v.cleared_edges) + "/" + std::to_string(v.total_edges)});
    report.check({"at most 17 searchers", v.max_simultaneous <= 17, std::to_string(v.max_simultaneous)});
  } else if (a.target == "forward-witness") {
    std::vector<int> solution;
    if (!a.solution.empty()) {
      solution = parse_solution(a.solution);
    } else {
      const auto found = solve_3dm_bruteforce(r.source);
      if (!found) throw std::invalid_argument("source instance has no exact cover; pass --solution");
      solution = *found;
    }
    report.value("solution", join_ints(solution));
    const VertexSet w = forward_witness(r, solution);
    report.value("witness_size", std::to_string(w.size()));
    report.check({"witness is geodetic", is_geodetic(r.graph, w).geodetic});
    report.check({"|P u Q| = k", static_cast<std::int64_t>(w.size()) == r.k});
  } else if (a.target == "construction") {
    report.checks(assert_construction(r));
  } else if (a.target == "structured") {
    const StructuredDecision d = structured_decide(r);
    const bool oracle = solve_3dm_bruteforce(r.source).has_value();
    report.value("structured", d.feasible ? "yes" : "no");
    if (d.feasible) report.value("choice", join_ints(d.choice));
    report.value("oracle", oracle ? "yes" : "no");
    report.check({"structured decision matches 3DM oracle", d.feasible == oracle});
  } else {
    throw std::invalid_argument("unknown verify target '" + a.target + "'");
  }
  report.timing("verify", since(start));
}

void run_export(const ExportArgs& a, RunReport& report) {
  const std::string bytes = read_file(a.input);
  report.input(a.input, bytes);
  std::istringstream in(bytes);
  const GraphDocument doc = read_edge_list(in);
  std::ostringstream text;
  if (a.format == "dot") {
    write_dot(text, doc);
  } else if (a.format == "graphml") {
    write_graphml(text, doc);
  } else if (a.format == "edgelist") {
    write_edge_list(text, doc);
  } else {
    throw std::invalid_argument("unknown format '" + a.format + "'");
  }
  write_text(a.out, text.str());
  report.value("format", a.format);
  report.value("vertices", std::to_string(doc.graph.vertex_count()));
  report.value("edges", std::to_string(doc.graph.edge_count()));
  report.value("output", a.out);
}

template <typename Fn>
int guarded(const std::string& echo, Fn&& fn) {
  RunReport report(echo);
  try {
    fn(report);
  } catch (const std::exception& e) {
    std::cerr << "geoset: " << e.what() << '\n';
    report.error(e.what());
  }
  report.render(std::cout);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodetic set and strong metric dimension toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a seeded random 3DM instance or E3P3 formula");
  generate->add_option("kind", gen.kind, "3dm | e3p3")->required()->check(CLI::IsMember({"3dm", "e3p3"}));
  generate->add_option("--n", gen.n, "Elements per coordinate / variables per part")->check(CLI::PositiveNumber);
  generate->add_option("--m", gen.m, "Number of sets / clauses");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_flag("--no", gen.no_instance, "3DM only: rejection-sample an instance without exact cover");
  generate->add_option("--out", gen.out, "Output path")->required();

  ReduceArgs red;
  auto* reduce = app.add_subcommand("reduce", "Run a reduction and write the resulting graph");
  reduce->add_option("kind", red.kind, "3dm-gs | e3p3-vc")->required()->check(CLI::IsMember({"3dm-gs", "e3p3-vc"}));
  reduce->add_option("input", red.input, "Instance file")->required();
  reduce->add_option("--M", red.M, "Path scale: integer or 'auto'");
  reduce->add_option("--epsilon", red.epsilon, "Slack p/q for the strict minimum");
  reduce->add_flag("--audit", red.audit, "Audit the constructed graph");
  reduce->add_option("--out", red.out, "Output path (default: input with .graph extension)");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("problem", sol.problem, "geodetic | smd | vc | 3dm | sat")
      ->required()
      ->check(CLI::IsMember({"geodetic", "smd", "vc", "3dm", "sat"}));
  solve->add_option("input", sol.input, "Instance file")->required();
  solve->add_flag("--oracle", sol.oracle, "Cross-check with the brute-force oracle");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Audit a reduced 3DM instance");
  verify->add_option("target", ver.target,
                     "pendant-cover | discrimination | fvs13 | mixed-search | forward-witness | construction | structured")
      ->required()
      ->check(CLI::IsMember(
          {"pendant-cover", "discrimination", "fvs13", "mixed-search", "forward-witness", "construction", "structured"}));
  verify->add_option("input", ver.input, "Reduced instance file")->required();
  verify->add_option("--solution", ver.solution, "forward-witness: comma-separated 1-based set indices");

  ExportArgs exp;
  auto* exporter = app.add_subcommand("export", "Convert an edge-list file");
  exporter->add_option("input", exp.input, "Edge-list file")->required();
  exporter->add_option("--format", exp.format, "dot | graphml | edgelist");
  exporter->add_option("--out", exp.out, "Output path")->required();

  CLI11_PARSE(app, argc, argv);

  std::string echo = "geoset";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

  if (*generate) return guarded(echo, [&](RunReport& r) { run_generate(gen, r); });
  if (*reduce) return guarded(echo, [&](RunReport& r) { run_reduce(red, r); });
  if (*solve) return guarded(echo, [&](RunReport& r) { run_solve(sol, r); });
  if (*verify) return guarded(echo, [&](RunReport& r) { run_verify(ver, r); });
  return guarded(echo, [&](RunReport& r) { run_export(exp, r); });
}
