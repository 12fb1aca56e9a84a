#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tis/instance.hpp"
#include "tis/rational.hpp"

namespace tis {

/// Random unit instance: every left endpoint is j/(n+1) for j drawn uniformly
/// with j/(n+1) <= spread. Weights are integers uniform in [1, max_weight].
/// Vertices are named v1..vn. Throws std::invalid_argument on bad parameters.
TemporalInstance gen_random_unit(int n, int tau, int delta, int k, std::uint64_t seed, const Rational& spread,
                                 int max_weight = 1);

/// Random unit instance whose layers all agree on one random vertex ordering:
/// right endpoints increase along it with gaps in {1..2(n+1)}/(n+1).
TemporalInstance gen_order_preserving(int n, int tau, int delta, int k, std::uint64_t seed, int max_weight = 1);

/// Hardness gadget for a list of permutations of one alphabet; one layer per
/// permutation, Δ = 1. Vertices: the alphabet characters (sorted), then the
/// left fixating cliques L<j>_<h>, then the right ones R<j>_<h>.
/// Throws std::invalid_argument unless all strings permute the same alphabet.
TemporalInstance gen_lcsp_gadget(std::span<const std::string> perms, int k = 0);

/// Length of a longest common subsequence of permutations of one alphabet.
/// Throws std::invalid_argument on invalid input.
std::size_t lcs_permutations(std::span<const std::string> perms);

} // namespace tis
