#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fpnorm {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Largest column (or row) absolute sum together with where it occurs.
struct IndexedSum {
  std::size_t index = 0;
  double value = 0.0;
};

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged or non-finite input.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> data() const noexcept { return data_; }

  /// y = A x
  void apply(std::span<const cplx> x, std::span<cplx> y) const;
  /// z = A^H y
  void apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const;
  ComplexVector operator*(std::span<const cplx> x) const;

  IndexedSum max_column_abs_sum() const;
  IndexedSum max_row_abs_sum() const;
  double max_abs() const;
  bool is_zero() const;

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Permutation matrix P with P e_j = e_{perm[j]}.
ComplexMatrix permutation_matrix(std::span<const std::size_t> perm);

}  // namespace fpnorm
