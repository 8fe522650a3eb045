#include "c2p/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "c2p/error.hpp"
#include "c2p/generator.hpp"
#include "c2p/io.hpp"
#include "c2p/reduction.hpp"
#include "c2p/solver_2sat.hpp"
#include "c2p/solver_exact.hpp"
#include "c2p/solver_oneplane.hpp"
#include "c2p/verify.hpp"

namespace c2p::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

template <class Parse>
auto read_file(const std::string& path, Parse parse) {
  std::ifstream in = open_input(path);
  return parse(in);
}

// Writes through `write` to `path`, or to `out` when path is empty.
template <class Write>
void emit(const std::string& path, std::ostream& out, Write write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
  if (!file) throw UsageError("error writing '" + path + "'");
}

std::string describe(const Instance& inst, EdgeId e) {
  const Edge& edge = inst.edge(e);
  return std::to_string(e) + " (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")";
}

void print_violations(const Instance& inst, const VerifyResult& r, std::ostream& out) {
  for (const Violation& v : r.violations) {
    switch (v.kind) {
      case ViolationKind::NotAPath:
        out << "violation not-a-path part " << v.part << '\n';
        break;
      case ViolationKind::MissingChoice:
        out << "violation missing-choice part " << v.part << '\n';
        break;
      case ViolationKind::UnresolvedCrossing:
        out << "violation unresolved-crossing " << describe(inst, v.crossing.first) << " x "
            << describe(inst, v.crossing.second) << '\n';
        break;
    }
  }
}

struct SolveArgs {
  std::string instance;
  std::string algorithm = "auto";
  std::string out;
  bool count = false;
  std::uint64_t cap = kDefaultSolutionCap;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_file(a.instance, parse_instance);
  if (a.count) {
    const SolutionCount c = count_solutions(inst, a.cap);
    out << "count " << c.count << (c.cap_exceeded ? " (cap reached)" : "") << '\n';
    return c.count > 0 ? kFeasible : kInfeasible;
  }
  std::string algorithm = a.algorithm;
  if (algorithm == "auto") {
    if (max_crossings_per_edge(inst) <= 1) {
      algorithm = "1plane";
    } else if (inst.max_part_size() <= 3) {
      algorithm = "2sat";
    } else {
      algorithm = "exact";
    }
  }

  std::optional<Solution> sol;
  if (algorithm == "exact") {
    sol = solve_exact(inst);
  } else if (algorithm == "2sat") {
    sol = solve_via_2sat(inst);
  } else {
    OnePlaneResult r = solve_one_plane(inst);
    if (r.status == OnePlaneStatus::NotOnePlane) {
      err << "error: NotOnePlane: edge " << describe(inst, *r.offending_edge)
          << " has more than one crossing\n";
      return kUsage;
    }
    if (r.has_unrealizable()) {
      err << "warning: " << r.flagged_components.size()
          << " crossing group(s) cannot come from a simple 1-plane drawing\n";
    }
    sol = std::move(r.solution);
  }

  const char* verdict = sol ? "feasible" : "infeasible";
  if (!sol) {
    out << (a.out.empty() ? "# " : "") << verdict << " (" << algorithm << ")\n";
    return kInfeasible;
  }
  if (a.out.empty()) {
    out << "# " << verdict << " (" << algorithm << ")\n";
    write_solution(out, *sol);
  } else {
    emit(a.out, out, [&](std::ostream& o) { write_solution(o, *sol); });
    out << verdict << " (" << algorithm << ")\n";
  }
  return kFeasible;
}

int cmd_verify(const std::string& instance, const std::string& solution, std::ostream& out) {
  const Instance inst = read_file(instance, parse_instance);
  const Solution sol = read_file(solution, parse_solution);
  const VerifyResult r = verify_solution(inst, sol);
  if (r.valid()) {
    out << "valid\n";
    return kFeasible;
  }
  out << "invalid\n";
  print_violations(inst, r, out);
  return kInfeasible;
}

struct ReduceArgs {
  std::string formula;
  std::size_t chain_length = 1;
  std::string out;
  std::string witness;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  if (a.chain_length == 0 || a.chain_length % 2 == 0) {
    throw Error(ErrorCode::EvenChain, "--chain-len must be odd, got " + std::to_string(a.chain_length));
  }
  const Formula f = read_file(a.formula, parse_formula);
  const Reduction red = reduce_formula(f, a.chain_length);
  emit(a.out, out, [&](std::ostream& o) { write_instance(o, red.instance); });
  if (!a.witness.empty()) {
    emit(a.witness, out, [&](std::ostream& o) { write_witness(o, red.witness); });
  }
  const std::size_t k = max_crossings_per_edge(red.instance);
  std::ostream& stats = a.out.empty() ? err : out;
  stats << "parts " << red.instance.part_count() << " crossings " << red.instance.crossings().size()
        << " h " << red.instance.max_part_size() << " max-crossings-per-edge " << k
        << " 3-plane: " << (k <= 3 ? "yes" : "no") << '\n';
  return kFeasible;
}

int cmd_extract(const std::string& instance, const std::string& witness,
                const std::string& solution, std::ostream& out) {
  const Instance inst = read_file(instance, parse_instance);
  const ReductionWitness w = read_file(witness, parse_witness);
  const Solution sol = read_file(solution, parse_solution);
  const VerifyResult r = verify_solution(inst, sol);
  if (!r.valid()) {
    out << "invalid\n";
    print_violations(inst, r, out);
    return kInfeasible;
  }
  write_assignment(out, extract_assignment(inst, w, sol));
  return kFeasible;
}

int cmd_oracle(const std::string& formula, std::ostream& out) {
  const Formula f = read_file(formula, parse_formula);
  const auto a = oracle_1in3(f);
  if (!a) {
    out << "s UNSATISFIABLE\n";
    return kInfeasible;
  }
  out << "s SATISFIABLE\n";
  write_assignment(out, *a);
  return kFeasible;
}

int cmd_stats(const std::string& instance, std::ostream& out) {
  const Instance inst = read_file(instance, parse_instance);
  std::size_t links = 0;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) links += inst.classify(e).kind == EdgeKind::Link;
  bool link_link = false;
  for (const CrossingPair& c : inst.crossings()) {
    if (inst.classify(c.first).kind == EdgeKind::Link &&
        inst.classify(c.second).kind == EdgeKind::Link) {
      link_link = true;
    }
  }
  out << "n " << inst.vertex_count() << '\n';
  out << "edges " << inst.edge_count() << '\n';
  out << "link-edges " << links << '\n';
  out << "crossings " << inst.crossings().size() << '\n';
  out << "parts " << inst.part_count() << '\n';
  out << "h " << inst.max_part_size() << '\n';
  out << "k " << max_crossings_per_edge(inst) << '\n';
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& part : inst.parts()) ++histogram[part.size()];
  out << "part-sizes";
  for (auto [size, count] : histogram) out << ' ' << size << 'x' << count;
  out << '\n';
  out << "link-link-crossing " << (link_link ? "yes" : "no") << '\n';
  return kFeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turn cliques into paths so that no two kept edges cross"};
  app.name(args.empty() ? "c2p" : args[0]);
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a solution");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--algorithm", solve.algorithm, "exact, 2sat, 1plane or auto")
      ->check(CLI::IsMember({"auto", "exact", "2sat", "1plane"}));
  solve_cmd->add_option("--out", solve.out, "Write the solution to this file");
  solve_cmd->add_flag("--count", solve.count, "Count solutions with the exact solver");
  solve_cmd->add_option("--cap", solve.cap, "Stop counting after this many solutions");

  std::string verify_instance, verify_solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution_path, "Solution file")->required();

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build an instance from a 1-in-3-SAT formula");
  reduce_cmd->add_option("formula", reduce.formula, "Formula file")->required();
  reduce_cmd->add_option("--chain-len", reduce.chain_length, "Odd chain length");
  reduce_cmd->add_option("--out", reduce.out, "Write the instance to this file");
  reduce_cmd->add_option("--witness", reduce.witness, "Write the gadget map to this file");

  std::string extract_instance, extract_witness, extract_solution;
  auto* extract_cmd = app.add_subcommand("extract", "Read a truth assignment off a solution");
  extract_cmd->add_option("instance", extract_instance, "Reduced instance")->required();
  extract_cmd->add_option("witness", extract_witness, "Witness file")->required();
  extract_cmd->add_option("solution", extract_solution, "Solution file")->required();

  std::string oracle_formula;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve a 1-in-3-SAT formula by exhaustive search");
  oracle_cmd->add_option("formula", oracle_formula, "Formula file")->required();

  std::string stats_instance;
  auto* stats_cmd = app.add_subcommand("stats", "Print instance statistics");
  stats_cmd->add_option("instance", stats_instance, "Instance file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate seeded random inputs");
  gen_cmd->require_subcommand(1);
  GenParams gen;
  std::string gen_out;
  std::uint32_t density = gen.crossing_permille;
  auto* gen_instance = gen_cmd->add_subcommand("instance", "Random instance");
  gen_instance->add_option("--seed", gen.seed);
  gen_instance->add_option("--parts", gen.parts);
  gen_instance->add_option("--min-size", gen.min_part_size);
  gen_instance->add_option("--max-size", gen.max_part_size);
  gen_instance->add_option("--links", gen.links);
  gen_instance->add_option("--density", density, "Crossing density in permille (0-1000)");
  gen_instance->add_option("--cap", gen.cap, "Maximum crossings per edge");
  gen_instance->add_flag("--realizable", gen.realizable, "Keep 1-plane crossing groups realizable");
  gen_instance->add_option("--out", gen_out);
  std::uint64_t formula_seed = 1;
  std::size_t nvars = 3, nclauses = 1;
  auto* gen_formula = gen_cmd->add_subcommand("formula", "Random positive 1-in-3-SAT formula");
  gen_formula->add_option("--seed", formula_seed);
  gen_formula->add_option("--nvars", nvars);
  gen_formula->add_option("--nclauses", nclauses);
  gen_formula->add_option("--out", gen_out);

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFeasible;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_solution_path, out);
    if (*reduce_cmd) return cmd_reduce(reduce, out, err);
    if (*extract_cmd) return cmd_extract(extract_instance, extract_witness, extract_solution, out);
    if (*oracle_cmd) return cmd_oracle(oracle_formula, out);
    if (*stats_cmd) return cmd_stats(stats_instance, out);
    if (*gen_instance) {
      gen.crossing_permille = density;
      const Instance inst = random_instance(gen);
      emit(gen_out, out, [&](std::ostream& o) { write_instance(o, inst); });
      return kFeasible;
    }
    if (*gen_formula) {
      const Formula f = random_formula(formula_seed, nvars, nclauses);
      emit(gen_out, out, [&](std::ostream& o) { write_formula(o, f); });
      return kFeasible;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_invariant_violation(e.code()) ? kInvariant : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace c2p::cli
