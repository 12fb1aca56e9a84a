#include "tis/c1p.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tis {

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }
  void unite(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }

private:
  std::vector<std::uint64_t> words_;
};

using Block = std::vector<std::size_t>;

// One connected component of the row-overlap graph, laid out as a sequence of
// column classes. Within a class the column order is free.
struct Component {
  std::vector<Block> blocks;
  Bits columns;
  std::size_t column_count = 0;
};

enum class Touch { None, Partial, Full };

// Places `row` into a sequence built from rows it overlaps. Returns false if
// no consistent placement exists.
bool place_row(std::vector<Block>& blocks, Bits& placed, const std::vector<std::size_t>& row, const Bits& row_bits) {
  if (blocks.empty()) {
    blocks.push_back(row);
    placed.unite(row_bits);
    return true;
  }
  Block fresh;
  for (std::size_t c : row) {
    if (!placed.test(c)) fresh.push_back(c);
  }
  const std::size_t k = blocks.size();
  std::vector<Touch> touch(k, Touch::None);
  std::size_t first = k;
  std::size_t last = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t hits = 0;
    for (std::size_t c : blocks[i]) hits += row_bits.test(c) ? 1 : 0;
    if (hits == 0) continue;
    touch[i] = hits == blocks[i].size() ? Touch::Full : Touch::Partial;
    first = std::min(first, i);
    last = i;
  }
  if (first == k) return false; // overlapping rows always share a column
  for (std::size_t i = first + 1; i < last; ++i) {
    if (touch[i] != Touch::Full) return false;
  }

  auto split = [&](std::size_t i, bool row_part_left) {
    Block in;
    Block out;
    for (std::size_t c : blocks[i]) (row_bits.test(c) ? in : out).push_back(c);
    auto pos = blocks.begin() + static_cast<std::ptrdiff_t>(i);
    pos = blocks.erase(pos);
    if (row_part_left) {
      pos = blocks.insert(pos, std::move(out));
      blocks.insert(pos, std::move(in));
    } else {
      pos = blocks.insert(pos, std::move(in));
      blocks.insert(pos, std::move(out));
    }
  };

  if (fresh.empty()) {
    if (first == last) return false; // a row inside one class cannot overlap a placed row
    if (touch[last] == Touch::Partial) split(last, true);
    if (touch[first] == Touch::Partial) split(first, false);
    return true;
  }

  const bool right_ok = last == k - 1 && (touch[last] == Touch::Full || first == last);
  const bool left_ok = first == 0 && (touch[first] == Touch::Full || first == last);
  if (right_ok && (!left_ok || k == 1)) {
    if (touch[first] == Touch::Partial) split(first, false);
    blocks.push_back(std::move(fresh));
  } else if (left_ok && !right_ok) {
    if (touch[last] == Touch::Partial) split(last, true);
    blocks.insert(blocks.begin(), std::move(fresh));
  } else {
    return false;
  }
  placed.unite(row_bits);
  return true;
}

} // namespace

BinaryMatrix::BinaryMatrix(std::size_t columns, std::vector<std::vector<std::size_t>> rows)
    : columns_(columns), rows_(std::move(rows)) {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (!row.empty() && row.back() >= columns_) throw std::invalid_argument("matrix column index out of range");
  }
}

BinaryMatrix BinaryMatrix::restricted_to_columns(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> remap(columns_, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) remap.at(keep[i]) = i;
  std::vector<std::vector<std::size_t>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<std::size_t> r;
    for (std::size_t c : row) {
      if (remap[c] != std::numeric_limits<std::size_t>::max()) r.push_back(remap[c]);
    }
    out.push_back(std::move(r));
  }
  return BinaryMatrix(keep.size(), std::move(out));
}

std::string BinaryMatrix::format(std::span<const std::string> column_names) const {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (c) os << ' ';
    os << (c < column_names.size() ? column_names[c] : std::to_string(c));
  }
  os << '\n';
  for (const auto& row : rows_) {
    std::string line(columns_, '0');
    for (std::size_t c : row) line[c] = '1';
    os << line << '\n';
  }
  return os.str();
}

bool rows_consecutive(const BinaryMatrix& matrix, std::span<const std::size_t> column_order) {
  if (column_order.size() != matrix.columns()) return false;
  std::vector<std::size_t> pos(matrix.columns(), std::numeric_limits<std::size_t>::max());
  for (std::size_t p = 0; p < column_order.size(); ++p) {
    if (column_order[p] >= matrix.columns() || pos[column_order[p]] != std::numeric_limits<std::size_t>::max()) {
      return false;
    }
    pos[column_order[p]] = p;
  }
  for (const auto& row : matrix.rows()) {
    if (row.empty()) continue;
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (std::size_t c : row) {
      lo = std::min(lo, pos[c]);
      hi = std::max(hi, pos[c]);
    }
    if (hi - lo + 1 != row.size()) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> consecutive_ones_ordering(const BinaryMatrix& matrix) {
  const std::size_t m = matrix.columns();

  // Rows with fewer than two ones or with every column never constrain the order.
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& row : matrix.rows()) {
    if (row.size() >= 2 && row.size() < m) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const std::size_t r = rows.size();
  std::vector<Bits> bits(r, Bits(m));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c : rows[i]) bits[i].set(c);
  }
  std::vector<std::vector<std::size_t>> overlap(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (bits[i].intersects(bits[j]) && !bits[i].subset_of(bits[j]) && !bits[j].subset_of(bits[i])) {
        overlap[i].push_back(j);
        overlap[j].push_back(i);
      }
    }
  }

  // Each overlap component is placed in BFS order so every new row overlaps
  // a row already placed; its class sequence is then unique up to reversal.
  std::vector<Component> comps;
  std::vector<bool> seen(r, false);
  for (std::size_t start = 0; start < r; ++start) {
    if (seen[start]) continue;
    Component comp;
    comp.columns = Bits(m);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      if (!place_row(comp.blocks, comp.columns, rows[i], bits[i])) return std::nullopt;
      for (std::size_t j : overlap[i]) {
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    for (const Block& b : comp.blocks) comp.column_count += b.size();
    comps.push_back(std::move(comp));
  }

  // Distinct components are nested inside a single class of another or are
  // disjoint. Attach each to the smallest enclosing class.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  struct Slot {
    std::size_t parent = none;
    std::size_t block = none;
  };
  std::vector<Slot> slot(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    // Smallest class first, then the component with the smaller union, so a
    // single-row component equal to a class sits between that class and what
    // it contains.
    std::pair<std::size_t, std::size_t> best{none, none};
    for (std::size_t p = 0; p < comps.size(); ++p) {
      if (p == c) continue;
      for (std::size_t b = 0; b < comps[p].blocks.size(); ++b) {
        const Block& block = comps[p].blocks[b];
        const std::pair<std::size_t, std::size_t> key{block.size(), comps[p].column_count};
        if (block.size() < comps[c].column_count || key >= best) continue;
        Bits block_bits(m);
        for (std::size_t col : block) block_bits.set(col);
        if (comps[c].columns.subset_of(block_bits)) {
          best = key;
          slot[c] = {p, b};
        }
      }
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> children(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) children[c].resize(comps[c].blocks.size());
  std::vector<std::size_t> roots;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (slot[c].parent == none) {
      roots.push_back(c);
    } else {
      children[slot[c].parent][slot[c].block].push_back(c);
    }
  }

  std::vector<std::size_t> order;
  std::vector<bool> emitted(m, false);
  auto emit = [&](auto&& self, std::size_t c) -> void {
    for (std::size_t b = 0; b < comps[c].blocks.size(); ++b) {
      for (std::size_t child : children[c][b]) self(self, child);
      for (std::size_t col : comps[c].blocks[b]) {
        if (!emitted[col]) {
          emitted[col] = true;
          order.push_back(col);
        }
      }
    }
  };
  for (std::size_t root : roots) emit(emit, root);
  for (std::size_t col = 0; col < m; ++col) {
    if (!emitted[col]) order.push_back(col);
  }

  if (!rows_consecutive(matrix, order)) {
    throw std::logic_error("consecutive-ones ordering failed self-verification");
  }
  return order;
}

std::vector<std::size_t> minimal_non_c1p_columns(const BinaryMatrix& matrix) {
  std::vector<std::size_t> keep(matrix.columns());
  for (std::size_t c = 0; c < keep.size(); ++c) keep[c] = c;
  // C1P is hereditary under column deletion, so one pass leaves a set from
  // which no single column can be dropped.
  for (std::size_t c = 0; c < matrix.columns(); ++c) {
    std::vector<std::size_t> trial;
    for (std::size_t x : keep) {
      if (x != c) trial.push_back(x);
    }
    if (!consecutive_ones_ordering(matrix.restricted_to_columns(trial))) keep = std::move(trial);
  }
  return keep;
}

C1PResult c1p_test(const BinaryMatrix& matrix) {
  C1PResult result;
  result.ordering = consecutive_ones_ordering(matrix);
  if (!result.ordering) result.witness = minimal_non_c1p_columns(matrix);
  return result;
}

} // namespace tis
