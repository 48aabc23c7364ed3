#pragma once

#include "fpnorm/complex_matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fpnorm {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  cplx value;
};

/// Compressed sparse row matrix with a transposed copy for adjoint products.
class SparseMatrix {
public:
  /// Duplicate (row, col) pairs are summed.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  void apply(std::span<const cplx> x, std::span<cplx> y) const;
  void apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const;
  IndexedSum max_column_abs_sum() const;
  IndexedSum max_row_abs_sum() const;

  ComplexMatrix to_dense() const;

private:
  struct Compressed {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> indices;
    std::vector<cplx> values;
  };
  static Compressed compress(std::size_t outer, std::vector<SparseEntry> entries, bool by_row);

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> row_offsets_, col_indices_;
  std::vector<cplx> values_;
  std::vector<std::size_t> col_offsets_, row_indices_;
  std::vector<cplx> values_by_col_;
};

}  // namespace fpnorm
