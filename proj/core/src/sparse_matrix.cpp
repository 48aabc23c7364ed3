#include "fpnorm/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpnorm {

SparseMatrix::Compressed SparseMatrix::compress(std::size_t outer, std::vector<SparseEntry> entries, bool by_row) {
  const auto key = [by_row](const SparseEntry& e) {
    return by_row ? std::pair{e.row, e.col} : std::pair{e.col, e.row};
  };
  std::sort(entries.begin(), entries.end(), [&](const SparseEntry& a, const SparseEntry& b) { return key(a) < key(b); });
  Compressed c;
  c.offsets.assign(outer + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [o, in] = key(entries[i]);
    if (!c.indices.empty() && i > 0 && key(entries[i - 1]) == key(entries[i])) {
      c.values.back() += entries[i].value;
      continue;
    }
    c.indices.push_back(in);
    c.values.push_back(entries[i].value);
    ++c.offsets[o + 1];
  }
  for (std::size_t o = 0; o < outer; ++o) c.offsets[o + 1] += c.offsets[o];
  return c;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries)
    : rows_(rows), cols_(cols) {
  for (const SparseEntry& e : entries)
    if (e.row >= rows || e.col >= cols) throw std::invalid_argument("sparse entry outside the matrix shape");
  Compressed by_col = compress(cols, entries, false);
  Compressed by_row = compress(rows, std::move(entries), true);
  row_offsets_ = std::move(by_row.offsets);
  col_indices_ = std::move(by_row.indices);
  values_ = std::move(by_row.values);
  col_offsets_ = std::move(by_col.offsets);
  row_indices_ = std::move(by_col.indices);
  values_by_col_ = std::move(by_col.values);
}

void SparseMatrix::apply(std::span<const cplx> x, std::span<cplx> y) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    cplx acc{};
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) acc += values_[k] * x[col_indices_[k]];
    y[r] = acc;
  }
}

void SparseMatrix::apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    cplx acc{};
    for (std::size_t k = col_offsets_[c]; k < col_offsets_[c + 1]; ++k)
      acc += std::conj(values_by_col_[k]) * y[row_indices_[k]];
    z[c] = acc;
  }
}

IndexedSum SparseMatrix::max_column_abs_sum() const {
  IndexedSum best;
  for (std::size_t c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (std::size_t k = col_offsets_[c]; k < col_offsets_[c + 1]; ++k) s += std::abs(values_by_col_[k]);
    if (c == 0 || s > best.value) best = {c, s};
  }
  return best;
}

IndexedSum SparseMatrix::max_row_abs_sum() const {
  IndexedSum best;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) s += std::abs(values_[k]);
    if (r == 0 || s > best.value) best = {r, s};
  }
  return best;
}

ComplexMatrix SparseMatrix::to_dense() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) m(r, col_indices_[k]) = values_[k];
  return m;
}

}  // namespace fpnorm
