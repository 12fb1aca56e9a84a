#include "tis/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tis {

namespace {

void check_common(int n, int tau, int delta, int k, int max_weight) {
  if (n < 1 || tau < 1) throw std::invalid_argument("n and tau must be positive");
  if (delta < 1 || delta > tau) throw std::invalid_argument("delta must lie in [1, tau]");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (max_weight < 1) throw std::invalid_argument("max weight must be positive");
}

std::vector<Vertex> numbered_vertices(int n, int max_weight, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<Vertex> out;
  for (int i = 1; i <= n; ++i) out.push_back({"v" + std::to_string(i), Rational(max_weight == 1 ? 1 : weight(rng))});
  return out;
}

} // namespace

TemporalInstance gen_random_unit(int n, int tau, int delta, int k, std::uint64_t seed, const Rational& spread,
                                 int max_weight) {
  check_common(n, tau, delta, k, max_weight);
  if (spread <= Rational(0)) throw std::invalid_argument("spread must be positive");
  const Rational scaled = spread * Rational(n + 1);
  const std::int64_t slots = scaled.num() / scaled.den();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> slot(0, slots);
  std::vector<IntervalModel> layers;
  for (int t = 0; t < tau; ++t) {
    std::vector<Interval> ivs;
    for (int v = 0; v < n; ++v) {
      Rational left(slot(rng), n + 1);
      ivs.push_back({left, left + Rational(1)});
    }
    layers.emplace_back(std::move(ivs));
  }
  auto vertices = numbered_vertices(n, max_weight, rng);
  return TemporalInstance::from_models(std::move(vertices), std::move(layers), {delta, k, true});
}

TemporalInstance gen_order_preserving(int n, int tau, int delta, int k, std::uint64_t seed, int max_weight) {
  check_common(n, tau, delta, k, max_weight);
  std::mt19937_64 rng(seed);
  std::vector<VertexIndex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::int64_t> gap(1, 2 * (n + 1));
  std::vector<IntervalModel> layers;
  for (int t = 0; t < tau; ++t) {
    std::vector<Interval> ivs(order.size());
    std::int64_t right = 0;
    for (VertexIndex v : order) {
      right += gap(rng);
      Rational r(right, n + 1);
      ivs[v] = {r - Rational(1), r};
    }
    layers.emplace_back(std::move(ivs));
  }
  auto vertices = numbered_vertices(n, max_weight, rng);
  return TemporalInstance::from_models(std::move(vertices), std::move(layers), {delta, k, true});
}

namespace {

std::string checked_alphabet(std::span<const std::string> perms) {
  if (perms.empty()) throw std::invalid_argument("need at least one permutation");
  std::string alphabet = perms.front();
  std::sort(alphabet.begin(), alphabet.end());
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    throw std::invalid_argument("'" + perms.front() + "' repeats a character");
  }
  for (const std::string& p : perms) {
    std::string sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != alphabet) throw std::invalid_argument("'" + p + "' is not a permutation of '" + alphabet + "'");
  }
  return alphabet;
}

} // namespace

TemporalInstance gen_lcsp_gadget(std::span<const std::string> perms, int k) {
  const std::string alphabet = checked_alphabet(perms);
  const auto n = static_cast<std::int64_t>(alphabet.size());
  const Rational eps(1, n + 2);
  std::vector<Vertex> vertices;
  for (char c : alphabet) vertices.push_back({std::string(1, c), Rational(1)});
  for (const char* side : {"L", "R"}) {
    for (std::int64_t j = 1; j <= n; ++j) {
      for (std::int64_t h = 1; h <= n; ++h) {
        vertices.push_back({side + std::to_string(j) + "_" + std::to_string(h), Rational(1)});
      }
    }
  }
  std::vector<IntervalModel> layers;
  for (const std::string& p : perms) {
    std::vector<Interval> ivs(vertices.size());
    for (std::int64_t i = 1; i <= n; ++i) {
      const auto v = static_cast<std::size_t>(alphabet.find(p[static_cast<std::size_t>(i - 1)]));
      const Rational left = Rational(1) + eps * Rational(i);
      ivs[v] = {left, left + Rational(1)};
    }
    std::size_t next = static_cast<std::size_t>(n);
    for (std::int64_t j = 1; j <= n; ++j) {
      const Rational left = eps * Rational(j - 1);
      for (std::int64_t h = 1; h <= n; ++h) ivs[next++] = {left, left + Rational(1)};
    }
    for (std::int64_t j = 1; j <= n; ++j) {
      const Rational left = Rational(2) + eps * Rational(j + 1);
      for (std::int64_t h = 1; h <= n; ++h) ivs[next++] = {left, left + Rational(1)};
    }
    layers.emplace_back(std::move(ivs));
  }
  return TemporalInstance::from_models(std::move(vertices), std::move(layers), {1, k, true});
}

namespace {

bool is_subsequence(const std::string& needle, const std::string& hay) {
  std::size_t i = 0;
  for (char c : hay) {
    if (i < needle.size() && needle[i] == c) ++i;
  }
  return i == needle.size();
}

} // namespace

std::size_t lcs_permutations(std::span<const std::string> perms) {
  checked_alphabet(perms);
  const std::size_t n = perms.front().size();
  if (perms.size() == 1) return n;
  if (perms.size() == 2) {
    const std::string& a = perms[0];
    const std::string& b = perms[1];
    std::vector<std::vector<std::size_t>> len(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        len[i][j] = a[i - 1] == b[j - 1] ? len[i - 1][j - 1] + 1 : std::max(len[i - 1][j], len[i][j - 1]);
      }
    }
    return len[n][n];
  }
  if (perms.size() == 3) {
    const std::string& a = perms[0];
    const std::string& b = perms[1];
    const std::string& c = perms[2];
    const std::size_t m = n + 1;
    std::vector<std::size_t> len(m * m * m, 0);
    auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> std::size_t& { return len[(i * m + j) * m + l]; };
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t l = 1; l <= n; ++l) {
          if (a[i - 1] == b[j - 1] && b[j - 1] == c[l - 1]) {
            at(i, j, l) = at(i - 1, j - 1, l - 1) + 1;
          } else {
            at(i, j, l) = std::max({at(i - 1, j, l), at(i, j - 1, l), at(i, j, l - 1)});
          }
        }
      }
    }
    return at(n, n, n);
  }
  if (n > 24) throw std::invalid_argument("alphabet too large for exhaustive search");
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::string sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(perms.front()[i]);
    }
    bool common = true;
    for (std::size_t t = 1; t < perms.size() && common; ++t) common = is_subsequence(sub, perms[t]);
    if (common) best = size;
  }
  return best;
}

} // namespace tis
