#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "tis/conflict.hpp"

namespace tis::cli {

struct BenchOptions {
  WindowSemantics semantics = WindowSemantics::Figure;
  std::optional<std::size_t> oracle_limit;
  std::size_t jobs = 1;
  bool timing = false;
};

inline constexpr const char* kBenchHeader =
    "instance,n,tau,delta,k,algorithm,objective,cardinality,runtime_ms,verified,oracle_objective,ratio_bound,"
    "bound_holds";

/// Writes the CSV report for every *.tis file directly inside `dir`.
void bench_directory(const std::filesystem::path& dir, const BenchOptions& options, std::ostream& csv);

} // namespace tis::cli
