#include "tis/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "tis/errors.hpp"
#include "tis/instance_io.hpp"
#include "tis/opvd.hpp"
#include "tis/order_preservation.hpp"
#include "tis/solvers.hpp"

namespace tis::cli {

namespace {

struct Row {
  std::string instance;
  std::string n = "-", tau = "-", delta = "-", k = "-";
  std::string algorithm;
  std::string objective = "-", cardinality = "-", runtime = "-", verified = "-";
  std::string oracle = "-", ratio_bound = "-", bound_holds = "-";
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

const char* const kAlgorithms[] = {"exact", "fpt", "greedy", "op"};

std::vector<Row> bench_file(const std::filesystem::path& path, const BenchOptions& options) {
  const std::string name = path.filename().string();
  std::vector<Row> rows;
  for (const char* alg : kAlgorithms) rows.push_back(Row{name, "-", "-", "-", "-", alg});
  TemporalInstance inst;
  try {
    inst = read_instance_file(path);
  } catch (const std::exception&) {
    for (Row& r : rows) r.verified = "ERROR";
    return rows;
  }
  for (Row& r : rows) {
    r.n = std::to_string(inst.size());
    r.tau = std::to_string(inst.tau());
    r.delta = std::to_string(inst.delta());
    r.k = std::to_string(inst.k());
  }
  const auto sem = options.semantics;
  std::optional<Rational> oracle;
  try {
    oracle = solve_exact_bruteforce(inst, sem, options.oracle_limit.value_or(30)).weight;
  } catch (const LimitExceeded&) {
  }
  const Rational bound(static_cast<std::int64_t>(neighborhood_bound(inst.tau(), inst.delta())));

  auto measure = [&](Row& row, const std::function<std::optional<Solution>()>& solve) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<Solution> sol;
    try {
      sol = solve();
    } catch (const LimitExceeded&) {
      row.verified = "LIMIT";
      return;
    } catch (const std::exception&) {
      row.verified = "ERROR";
      return;
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    if (!sol) {
      row.objective = "N/A";
      row.verified = "N/A";
      return;
    }
    if (options.timing) row.runtime = format_ms(elapsed.count());
    row.objective = sol->weight.str();
    row.cardinality = std::to_string(sol->cardinality());
    row.verified = verify_solution(inst, sol->selected, sem).independence.independent ? "PASS" : "FAIL";
    const bool approximate = row.algorithm == "greedy";
    row.ratio_bound = approximate ? bound.str() : "1";
    if (oracle) {
      row.oracle = oracle->str();
      if (!approximate) {
        row.bound_holds = sol->weight == *oracle ? "true" : "false";
      } else if (inst.unit()) {
        row.bound_holds = sol->weight * bound >= *oracle ? "true" : "false";
      }
    }
  };

  measure(rows[0], [&]() -> std::optional<Solution> {
    return solve_exact_bruteforce(inst, sem, options.oracle_limit.value_or(30));
  });
  measure(rows[1], [&]() -> std::optional<Solution> {
    if (!inst.unit()) return std::nullopt;
    const auto s = min_opvd(inst);
    return solve_fpt(inst, s.deletion_set, sem);
  });
  measure(rows[2], [&]() -> std::optional<Solution> { return solve_greedy(inst, sem); });
  measure(rows[3], [&]() -> std::optional<Solution> {
    const auto ordering = find_common_ordering(inst);
    if (!ordering) return std::nullopt;
    return solve_exact_op(inst, *ordering, sem);
  });
  return rows;
}

} // namespace

void bench_directory(const std::filesystem::path& dir, const BenchOptions& options, std::ostream& csv) {
  if (!std::filesystem::is_directory(dir)) throw Error("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".tis") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::vector<Row>> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) results[i] = bench_file(files[i], options);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Row> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.algorithm) < std::tie(b.instance, b.algorithm);
  });
  csv << kBenchHeader << '\n';
  for (const Row& r : rows) {
    const std::string fields[] = {r.instance, r.n,       r.tau,      r.delta,  r.k,           r.algorithm, r.objective,
                                  r.cardinality, r.runtime, r.verified, r.oracle, r.ratio_bound, r.bound_holds};
    for (std::size_t i = 0; i < std::size(fields); ++i) csv << (i ? "," : "") << csv_field(fields[i]);
    csv << '\n';
  }
}

} // namespace tis::cli
