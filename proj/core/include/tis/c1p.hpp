#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tis {

/// 0/1 matrix stored row-wise as sorted, duplicate-free column index lists.
class BinaryMatrix {
public:
  BinaryMatrix() = default;
  /// Throws std::invalid_argument on column indices >= columns.
  BinaryMatrix(std::size_t columns, std::vector<std::vector<std::size_t>> rows);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::size_t>>& rows() const noexcept { return rows_; }

  /// Submatrix on `keep`; column keep[i] becomes column i. Rows may become empty.
  BinaryMatrix restricted_to_columns(std::span<const std::size_t> keep) const;

  /// Debug format: a header line of column names, then one line of 0/1 per row.
  std::string format(std::span<const std::string> column_names) const;

private:
  std::size_t columns_ = 0;
  std::vector<std::vector<std::size_t>> rows_;
};

/// Either a column permutation putting every row's ones consecutively, or an
/// inclusion-minimal set of columns whose submatrix has no such permutation.
struct C1PResult {
  std::optional<std::vector<std::size_t>> ordering;
  std::vector<std::size_t> witness;

  bool has_c1p() const noexcept { return ordering.has_value(); }
};

/// Whether every row is consecutive when columns are laid out as `column_order`.
bool rows_consecutive(const BinaryMatrix& matrix, std::span<const std::size_t> column_order);

/// Overlap-component decomposition with incremental class refinement.
/// The returned ordering is re-verified against every row.
std::optional<std::vector<std::size_t>> consecutive_ones_ordering(const BinaryMatrix& matrix);

/// Greedy column dropping; precondition: `matrix` has no C1P ordering.
std::vector<std::size_t> minimal_non_c1p_columns(const BinaryMatrix& matrix);

C1PResult c1p_test(const BinaryMatrix& matrix);

} // namespace tis
