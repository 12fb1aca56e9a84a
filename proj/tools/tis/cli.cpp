#include "tis/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "tis/bench.hpp"
#include "tis/conflict.hpp"
#include "tis/errors.hpp"
#include "tis/generators.hpp"
#include "tis/instance_io.hpp"
#include "tis/opvd.hpp"
#include "tis/order_preservation.hpp"
#include "tis/solvers.hpp"

namespace tis::cli {

namespace {

struct Globals {
  std::string semantics = "figure";
  std::uint64_t seed = 0;
  std::optional<std::size_t> limit_oracle;

  WindowSemantics window() const { return *parse_window_semantics(semantics); }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_names(const TemporalInstance& inst, const std::vector<VertexIndex>& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (VertexIndex v : vs) out += (out.empty() ? "" : ",") + inst.name(v);
  return out;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const auto inst = read_instance_file(file);
  out << "VALID mode=" << (inst.mode() == LayerMode::Model ? "model" : "edges") << " n=" << inst.size()
      << " tau=" << inst.tau() << " delta=" << inst.delta() << " k=" << inst.k()
      << " unit=" << (inst.unit() ? "true" : "false") << '\n';
  return kYes;
}

int cmd_conflict(const std::string& file, const std::string& format, const Globals& g, std::ostream& out) {
  const auto inst = read_instance_file(file);
  const StaticGraph conflict = conflict_graph(inst, g.window());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Edge& e : conflict.edges()) pairs.push_back(std::minmax(inst.name(e.u), inst.name(e.v)));
  std::sort(pairs.begin(), pairs.end());
  if (format == "dot") {
    out << "graph conflict {\n";
    for (const Vertex& v : inst.vertices()) out << "  \"" << v.name << "\";\n";
    for (const auto& [a, b] : pairs) out << "  \"" << a << "\" -- \"" << b << "\";\n";
    out << "}\n";
  } else {
    for (const auto& [a, b] : pairs) out << a << ' ' << b << '\n';
  }
  return kYes;
}

std::vector<VertexIndex> auto_opvd(const TemporalInstance& inst) { return min_opvd(inst).deletion_set; }

int cmd_solve(const std::string& file, const std::string& alg, const std::string& opvd_set, bool opvd_auto,
              const Globals& g, std::ostream& out) {
  const auto inst = read_instance_file(file);
  const auto sem = g.window();
  Solution sol;
  std::optional<std::vector<VertexIndex>> deletion;
  if (alg == "exact") {
    sol = solve_exact_bruteforce(inst, sem, g.limit_oracle.value_or(30));
  } else if (alg == "greedy") {
    sol = solve_greedy(inst, sem);
  } else if (alg == "op") {
    const auto ordering = find_common_ordering(inst);
    if (!ordering) throw InvalidInstance("instance is not order preserving");
    sol = solve_exact_op(inst, *ordering, sem);
  } else {
    if (!opvd_set.empty() && !opvd_auto) {
      const auto names = split_list(opvd_set);
      deletion = inst.resolve(names);
    } else {
      deletion = auto_opvd(inst);
    }
    sol = solve_fpt(inst, *deletion, sem);
  }
  const auto report = verify_solution(inst, sol.selected, sem);
  out << "algorithm " << alg << '\n';
  if (deletion) {
    std::vector<VertexIndex> sorted = *deletion;
    std::sort(sorted.begin(), sorted.end());
    out << "opvd " << join_names(inst, sorted) << '\n';
  }
  out << "objective " << sol.weight << '\n';
  out << "cardinality " << sol.cardinality() << '\n';
  out << "set " << join_names(inst, sol.selected) << '\n';
  out << "verify " << (report.independence.independent ? "PASS" : "FAIL") << '\n';
  out << "decision " << (report.meets_k ? "yes" : "no") << " k=" << inst.k() << '\n';
  return report.meets_k ? kYes : kNo;
}

int cmd_opvd(const std::string& file, bool exact, std::optional<std::size_t> budget, const Globals& g,
             std::ostream& out) {
  const auto inst = read_instance_file(file);
  OpvdResult result;
  if (exact) {
    result = opvd_exhaustive(inst, g.limit_oracle.value_or(16));
    if (budget && result.size() > *budget) {
      throw BudgetExceeded("minimum deletion set has " + std::to_string(result.size()) + " vertices");
    }
  } else {
    result = min_opvd(inst, OpvdOptions{budget, std::nullopt});
  }
  out << "size " << result.size() << '\n';
  out << "set " << join_names(inst, result.deletion_set) << '\n';
  out << "ordering " << join_names(inst, result.ordering) << '\n';
  return kYes;
}

int cmd_recognize(const std::string& file, std::ostream& out) {
  const auto inst = read_instance_file(file);
  const auto report = recognize_order_preserving(inst);
  if (report.is_order_preserving) {
    out << "ORDER-PRESERVING " << join_names(inst, report.ordering->order()) << '\n';
    return kYes;
  }
  out << "NOT-ORDER-PRESERVING witness=" << join_names(inst, report.witness) << '\n';
  return kNo;
}

struct GenArgs {
  std::string kind;
  int n = 8;
  int tau = 2;
  int delta = 1;
  int k = 0;
  std::string spread;
  int max_weight = 1;
  std::string perms;
  std::string out;
};

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
  TemporalInstance inst;
  if (a.kind == "random") {
    const Rational spread = a.spread.empty() ? Rational(a.n, 2) : Rational::parse(a.spread);
    inst = gen_random_unit(a.n, a.tau, a.delta, a.k, g.seed, spread, a.max_weight);
  } else if (a.kind == "op") {
    inst = gen_order_preserving(a.n, a.tau, a.delta, a.k, g.seed, a.max_weight);
  } else {
    const auto perms = split_list(a.perms);
    inst = gen_lcsp_gadget(perms, a.k);
  }
  if (a.out.empty()) {
    out << serialize_instance(inst);
  } else {
    write_instance_file(a.out, inst);
  }
  return kYes;
}

int cmd_bench(const std::string& dir, const std::string& csv_path, std::size_t jobs, bool timing, const Globals& g,
              std::ostream& out) {
  BenchOptions options{g.window(), g.limit_oracle, jobs, timing};
  if (csv_path.empty()) {
    bench_directory(dir, options, out);
  } else {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw Error("cannot write '" + csv_path + "'");
    bench_directory(dir, options, csv);
  }
  return kYes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal Delta Independent Set toolkit", "tis"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::size_t limit = 0;
  app.add_option("--window-semantics", g.semantics, "Window layout: figure or formula")
      ->check(CLI::IsMember({"figure", "formula"}));
  app.add_option("--seed", g.seed, "Random seed for generators");
  auto* limit_opt = app.add_option("--limit-oracle", limit, "Vertex cap for exhaustive oracles");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
  validate->add_option("file", file)->required();

  std::string format = "edgelist";
  auto* conflict = app.add_subcommand("conflict", "Print the conflict graph");
  conflict->add_option("file", file)->required();
  conflict->add_option("--out", format)->check(CLI::IsMember({"edgelist", "dot"}));

  std::string alg = "exact";
  std::string opvd_set;
  std::string opvd_mode;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("file", file)->required();
  solve->add_option("--alg", alg)->check(CLI::IsMember({"exact", "greedy", "op", "fpt"}));
  solve->add_option("--opvd-set", opvd_set, "Comma-separated deletion set for fpt");
  solve->add_option("--opvd", opvd_mode, "Compute the deletion set for fpt")->check(CLI::IsMember({"auto"}));

  bool exact = false;
  std::size_t budget = 0;
  auto* opvd = app.add_subcommand("opvd", "Minimum deletion set to order preservation");
  opvd->add_option("file", file)->required();
  opvd->add_flag("--exact", exact, "Use exhaustive subset enumeration");
  auto* budget_opt = opvd->add_option("--budget", budget, "Largest deletion set to try");

  auto* recognize = app.add_subcommand("recognize", "Test order preservation");
  recognize->add_option("file", file)->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", gen_args.kind)->required()->check(CLI::IsMember({"random", "op", "lcsp"}));
  gen->add_option("--n", gen_args.n);
  gen->add_option("--tau", gen_args.tau);
  gen->add_option("--delta", gen_args.delta);
  gen->add_option("--k", gen_args.k);
  gen->add_option("--spread", gen_args.spread, "Left endpoint range, p or p/q (default n/2)");
  gen->add_option("--max-weight", gen_args.max_weight);
  gen->add_option("--perms", gen_args.perms, "Comma-separated permutations for lcsp");
  gen->add_option("--out", gen_args.out);

  std::string csv_path;
  std::size_t jobs = 1;
  bool timing = false;
  auto* bench = app.add_subcommand("bench", "Run every solver on a directory of instances");
  bench->add_option("dir", file)->required();
  bench->add_option("--out", csv_path, "CSV output file (default stdout)");
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_flag("--timing", timing, "Fill runtime_ms (otherwise '-')");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }
  if (*limit_opt) g.limit_oracle = limit;

  try {
    if (*validate) return cmd_validate(file, out);
    if (*conflict) return cmd_conflict(file, format, g, out);
    if (*solve) return cmd_solve(file, alg, opvd_set, opvd_mode == "auto", g, out);
    if (*opvd) {
      return cmd_opvd(file, exact, *budget_opt ? std::optional<std::size_t>(budget) : std::nullopt, g, out);
    }
    if (*recognize) return cmd_recognize(file, out);
    if (*gen) {
      if (gen_args.kind == "lcsp" && gen_args.perms.empty()) throw std::invalid_argument("lcsp needs --perms");
      return cmd_gen(gen_args, g, out);
    }
    if (*bench) return cmd_bench(file, csv_path, jobs, timing, g, out);
  } catch (const LimitExceeded& e) {
    err << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const BudgetExceeded& e) {
    out << "BUDGET-EXCEEDED\n";
    err << "budget: " << e.what() << '\n';
    return kNo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

} // namespace tis::cli
