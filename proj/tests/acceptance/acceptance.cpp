// One line per acceptance criterion: "PASS <n> <summary>" or "FAIL <n> <summary>".

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tis/c1p.hpp"
#include "tis/cli.hpp"
#include "tis/conflict.hpp"
#include "tis/generators.hpp"
#include "tis/interval_engine.hpp"
#include "tis/opvd.hpp"
#include "tis/order_preservation.hpp"
#include "tis/solvers.hpp"

using namespace tis;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    pass = false;
    if (detail.empty()) detail = "first failure: " + what;
  }
};

std::string seed_tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

// Shared corpus for criteria 3 and 4.
std::vector<TemporalInstance> random_unit_corpus() {
  std::vector<TemporalInstance> out;
  for (std::uint64_t seed = 0; seed < 520; ++seed) {
    std::mt19937_64 rng(seed * 7919 + 1);
    const int n = 4 + static_cast<int>(rng() % 11);
    const int tau = 2 + static_cast<int>(rng() % 3);
    const int delta = 1 + static_cast<int>(rng() % 2);
    const Rational spread(n, 2 + static_cast<int>(rng() % 3));
    out.push_back(gen_random_unit(n, tau, delta, 0, seed, spread, 10));
  }
  return out;
}

Outcome three_layer_example() {
  Outcome o;
  const auto inst = fixtures::load("example_three_layers.tis");
  const StaticGraph expected(inst.size(), fixtures::named_edges(inst, {{"v1", "v2"},
                                                                        {"v1", "v3"},
                                                                        {"v2", "v3"},
                                                                        {"v2", "v4"},
                                                                        {"v3", "v5"}}));
  o.check(conflict_graph(inst, WindowSemantics::Figure) == expected, "conflict graph edges");
  o.check(solve_exact_bruteforce(inst).cardinality() == 3, "optimum cardinality");
  const std::vector<std::string> s{"v1", "v4", "v5"};
  o.check(verify_solution(inst, s).accepted(), "verify {v1,v4,v5}");
  return o;
}

Outcome no_common_order_example() {
  Outcome o;
  for (const char* file : {"example_no_common_order.tis", "example_no_common_order_model.tis"}) {
    const auto inst = fixtures::load(file);
    o.check(!recognize_order_preserving(inst).is_order_preserving, std::string(file) + " recognized");
    o.check(min_opvd(inst).size() == 1, std::string(file) + " deletion size");
    const std::vector<std::string> v4{"v4"};
    o.check(recognize_order_preserving(remove_vertices(inst, v4)).is_order_preserving,
            std::string(file) + " minus v4");
  }
  return o;
}

Outcome approximation_ratio(const std::vector<TemporalInstance>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus[i];
    const Rational bound(static_cast<std::int64_t>(neighborhood_bound(inst.tau(), inst.delta())));
    const auto greedy = solve_greedy(inst);
    const auto best = oracle::mwis_weight(oracle::conflict_graph(inst), inst.weights());
    o.check(solve_exact_bruteforce(inst).weight == best, seed_tag("brute force", i));
    o.check(greedy.weight * bound >= best, seed_tag("ratio", i));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " instances";
  return o;
}

Outcome neighborhood_packing(const std::vector<TemporalInstance>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus[i];
    const auto g = conflict_graph(inst);
    const auto bound = neighborhood_bound(inst.tau(), inst.delta());
    for (VertexIndex v = 0; v < inst.size(); ++v) {
      auto closed = g.neighbors(v);
      closed.push_back(v);
      std::sort(closed.begin(), closed.end());
      o.check(oracle::mis_size(g.induced(closed)) <= bound, seed_tag("oracle bound", i));
      o.check(neighborhood_is_bound_check(inst, v), seed_tag("library bound", i));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(o.cases / 2) + " vertices";
  return o;
}

Outcome closure_laws() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 520; ++seed) {
    std::mt19937_64 rng(seed + 100);
    const std::size_t n = 1 + rng() % 10;
    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    const VertexOrdering ordering(order);
    const bool unit = seed % 2 == 0;
    auto layer = [&] {
      std::vector<Interval> ivs(n);
      std::int64_t right = 0;
      for (VertexIndex v : order) {
        right += 1 + static_cast<std::int64_t>(rng() % 5);
        const std::int64_t len = unit ? 6 : static_cast<std::int64_t>(rng() % 10);
        ivs[v] = {Rational(right - len), Rational(right)};
      }
      return IntervalModel(ivs);
    };
    const IntervalModel a = layer(), b = layer();
    // Right endpoints increase along the ordering, so both layers must normalize.
    const auto na = try_normalize_to_ordering(a.graph(), ordering);
    const auto nb = try_normalize_to_ordering(b.graph(), ordering);
    if (!na.model || !nb.model) {
      o.check(false, seed_tag("agreeing layer failed to normalize", seed));
      continue;
    }
    ++pairs;
    const auto meet = intersect_models(*na.model, *nb.model);
    const auto join = union_models(*na.model, *nb.model);
    o.check(meet.graph() == edge_intersection(a.graph(), b.graph()), seed_tag("intersection", seed));
    o.check(join.graph() == edge_union(a.graph(), b.graph()), seed_tag("union", seed));
    o.check(agrees_with(meet, ordering) && agrees_with(join, ordering), seed_tag("agreement", seed));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs) + " pairs";
  return o;
}

Outcome order_preserving_solver() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 220; ++seed) {
    std::mt19937_64 rng(seed + 500);
    const int n = 2 + static_cast<int>(rng() % 13);
    const int tau = 1 + static_cast<int>(rng() % 4);
    const int delta = 1 + static_cast<int>(rng() % tau);
    const auto inst = gen_order_preserving(n, tau, delta, 0, seed, 10);
    const auto report = recognize_order_preserving(inst);
    if (!report.is_order_preserving) {
      o.check(false, seed_tag("generated instance not recognized", seed));
      continue;
    }
    const auto model = conflict_interval_model(inst, *report.ordering);
    o.check(model.graph() == conflict_graph(inst), seed_tag("model graph", seed));
    o.check(model.graph() == oracle::conflict_graph(inst), seed_tag("model graph vs definition", seed));
    o.check(solve_exact_op(inst, *report.ordering).weight == solve_exact_bruteforce(inst).weight,
            seed_tag("weight", seed));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(220) + " instances";
  return o;
}

Outcome recognition_iff() {
  Outcome o;
  std::size_t yes = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    std::mt19937_64 rng(seed + 900);
    const int n = 2 + static_cast<int>(rng() % 6);
    const int tau = 2 + static_cast<int>(rng() % 2);
    const auto inst = gen_random_unit(n, tau, 1, 0, seed, Rational(n, 2 + static_cast<int>(rng() % 2)));
    const bool c1p = c1p_test(pooled_clique_matrix(inst).as_matrix()).has_c1p();
    const bool recognized = recognize_order_preserving(inst).is_order_preserving;
    const bool exhaustive = oracle::common_umbrella_ordering(inst);
    o.check(c1p == exhaustive && recognized == exhaustive, seed_tag("recognition", seed));
    yes += exhaustive;
    ++total;
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(total) + " instances, " + std::to_string(yes) +
              " order preserving";
  return o;
}

Outcome deletion_and_fpt() {
  Outcome o;
  std::size_t nonzero = 0;
  for (std::uint64_t seed = 0; seed < 110; ++seed) {
    std::mt19937_64 rng(seed + 1300);
    const int n = 3 + static_cast<int>(rng() % 10);
    const int tau = 2 + static_cast<int>(rng() % 2);
    const auto inst = gen_random_unit(n, tau, 1, 0, seed, Rational(n, 3));
    const auto fast = min_opvd(inst);
    o.check(fast.size() == opvd_exhaustive(inst).size(), seed_tag("deletion size", seed));
    nonzero += fast.size() > 0;
  }
  for (std::uint64_t seed = 0; seed < 210; ++seed) {
    std::mt19937_64 rng(seed + 1700);
    const int n = 3 + static_cast<int>(rng() % 12);
    const int tau = 2 + static_cast<int>(rng() % 2);
    const int delta = 1 + static_cast<int>(rng() % 2);
    const auto inst = gen_random_unit(n, tau, delta, 0, seed, Rational(n, 3), 10);
    const auto s = min_opvd(inst).deletion_set;
    const auto fpt = solve_fpt(inst, s);
    o.check(fpt.weight == solve_exact_bruteforce(inst).weight, seed_tag("fpt weight", seed));
    o.check(verify_solution(inst, fpt.selected).independence.independent, seed_tag("fpt independence", seed));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("110 deletion cases (") + std::to_string(nonzero) +
              " nonzero), 210 fpt cases";
  return o;
}

Outcome gadget_law() {
  Outcome o;
  std::size_t cases = 0;
  std::mt19937_64 rng(4242);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t tau = 1; tau <= 3; ++tau) {
      const std::size_t samples = n == 1 ? 1 : 6;
      for (std::size_t s = 0; s < samples; ++s) {
        std::string base;
        for (std::size_t i = 0; i < n; ++i) base.push_back(static_cast<char>('a' + i));
        std::vector<std::string> perms;
        for (std::size_t t = 0; t < tau; ++t) {
          std::shuffle(base.begin(), base.end(), rng);
          perms.push_back(base);
        }
        const auto g = gen_lcsp_gadget(perms);
        const std::size_t lcs = oracle::lcs_chain(perms);
        const std::string tag = "perms " + std::accumulate(perms.begin(), perms.end(), std::string(),
                                                           [](std::string a, const std::string& b) {
                                                             return a.empty() ? b : a + "," + b;
                                                           });
        o.check(lcs_permutations(perms) == lcs, tag + " lcs");
        std::vector<VertexIndex> sigma(n);
        std::iota(sigma.begin(), sigma.end(), VertexIndex{0});
        const auto restricted = min_opvd(g, OpvdOptions{std::nullopt, sigma});
        o.check(restricted.size() == n - lcs, tag + " restricted size");
        // Unrestricted search must not do better, and its set stays in the alphabet part.
        const auto full = min_opvd(g);
        o.check(full.size() == n - lcs, tag + " unrestricted size");
        o.check(std::all_of(full.deletion_set.begin(), full.deletion_set.end(), [&](VertexIndex v) { return v < n; }),
                tag + " deletion set inside alphabet vertices");
        ++cases;
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cases) + " permutation sets";
  return o;
}

Outcome c1p_oracle() {
  Outcome o;
  std::mt19937_64 rng(1010);
  std::size_t with = 0;
  for (int i = 0; i < 1200; ++i) {
    const std::size_t cols = 1 + rng() % 8;
    const std::size_t rows = 1 + rng() % 8;
    const int density = 15 + static_cast<int>(rng() % 50);
    std::vector<std::vector<std::size_t>> r(rows);
    for (auto& row : r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (static_cast<int>(rng() % 100) < density) row.push_back(c);
      }
    }
    const BinaryMatrix m(cols, r);
    const auto got = c1p_test(m);
    const bool expected = oracle::c1p_by_permutations(m).has_value();
    o.check(got.has_c1p() == expected, "matrix " + std::to_string(i));
    if (got.has_c1p()) {
      ++with;
      o.check(rows_consecutive(m, *got.ordering), "ordering of matrix " + std::to_string(i));
    } else {
      o.check(!oracle::c1p_by_permutations(m.restricted_to_columns(got.witness)).has_value(),
              "witness of matrix " + std::to_string(i));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("1200 matrices, ") + std::to_string(with) + " with C1P";
  return o;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "tis_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir / "corpus");
  for (int i = 0; i < 8; ++i) {
    cli({"--seed", std::to_string(i), "gen", i % 2 ? "op" : "random", "--n", std::to_string(6 + i), "--tau", "3",
         "--delta", "2", "--max-weight", "5", "--out", (dir / "corpus" / ("g" + std::to_string(i) + ".tis")).string()});
  }
  fs::copy_file(fixtures::data("example_three_layers.tis"), dir / "corpus" / "three.tis");
  fs::copy_file(fixtures::data("example_no_common_order.tis"), dir / "corpus" / "nocommon.tis");
  const std::string three = fixtures::data("example_three_layers.tis");
  const std::string two = fixtures::data("example_no_common_order.tis");
  const std::vector<std::vector<std::string>> commands{
      {"validate", three},
      {"conflict", three},
      {"conflict", three, "--out", "dot"},
      {"--window-semantics", "formula", "conflict", three},
      {"solve", three, "--alg", "exact"},
      {"solve", three, "--alg", "greedy"},
      {"solve", two, "--alg", "fpt", "--opvd", "auto"},
      {"solve", two, "--alg", "fpt", "--opvd-set", "v4"},
      {"solve", (dir / "corpus" / "g1.tis").string(), "--alg", "op"},
      {"opvd", two},
      {"opvd", two, "--exact"},
      {"recognize", two},
      {"recognize", (dir / "corpus" / "g3.tis").string()},
      {"--seed", "7", "gen", "random", "--n", "9", "--tau", "3"},
      {"--seed", "7", "gen", "op", "--n", "9", "--tau", "3"},
      {"gen", "lcsp", "--perms", "abcd,badc,dcab"},
      {"bench", (dir / "corpus").string()},
      {"bench", (dir / "corpus").string(), "--jobs", "4"},
  };
  std::vector<Run> first, second(commands.size());
  for (const auto& c : commands) first.push_back(cli(c));
  // Same commands again, concurrently.
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < commands.size(); ++i) threads.emplace_back([&, i] { second[i] = cli(commands[i]); });
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < commands.size(); ++i) {
    o.check(first[i].code == second[i].code && first[i].out == second[i].out, "command " + std::to_string(i));
  }
  o.check(first[16].out == first[17].out, "bench with 1 vs 4 jobs");
  fs::remove_all(dir);
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(commands.size()) + " commands";
  return o;
}

} // namespace

int main() {
  const auto corpus = random_unit_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-layer worked example: conflict graph, optimum 3, {v1,v4,v5} verified", three_layer_example},
      {"two-layer example without common ordering: not order preserving, one deletion, v4 suffices",
       no_common_order_example},
      {"greedy weight times (tau-delta+1)*2^delta bounds the optimum on random unit instances",
       [&] { return approximation_ratio(corpus); }},
      {"independent sets inside closed conflict neighborhoods respect 2^delta*(tau-delta+1)",
       [&] { return neighborhood_packing(corpus); }},
      {"normalized intersection and union models induce edge intersection and union", closure_laws},
      {"conflict interval model and exact order-preserving solver on order-preserving instances",
       order_preserving_solver},
      {"clique-matrix recognition agrees with exhaustive ordering search (n <= 7)", recognition_iff},
      {"deletion search equals exhaustive enumeration; fpt with it equals brute force", deletion_and_fpt},
      {"gadget deletion size equals n - LCS with deletions inside the alphabet vertices", gadget_law},
      {"c1p test agrees with permutation brute force on matrices with <= 8 columns", c1p_oracle},
      {"CLI output is byte-identical across reruns and concurrent runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << ' ' << criteria[i].first << " [" << o.cases
              << " checks" << (o.detail.empty() ? "" : "; " + o.detail) << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
