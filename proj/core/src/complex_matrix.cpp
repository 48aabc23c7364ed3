#include "fpnorm/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fpnorm {

namespace {

void require_finite(const cplx& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("matrix entries must be finite");
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shapes differ");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (const cplx& z : r) {
      require_finite(z);
      data_.push_back(z);
    }
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(data_.size()));
  for (const cplx& z : data_) require_finite(z);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

void ComplexMatrix::apply(std::span<const cplx> x, std::span<cplx> y) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    const cplx* a = data_.data() + r * cols_;
    double re = 0.0, im = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      re += a[c].real() * x[c].real() - a[c].imag() * x[c].imag();
      im += a[c].real() * x[c].imag() + a[c].imag() * x[c].real();
    }
    y[r] = cplx(re, im);
  }
}

void ComplexMatrix::apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const {
  std::fill(z.begin(), z.end(), cplx{});
  for (std::size_t r = 0; r < rows_; ++r) {
    const cplx* a = data_.data() + r * cols_;
    const cplx yr = y[r];
    for (std::size_t c = 0; c < cols_; ++c) z[c] += std::conj(a[c]) * yr;
  }
}

ComplexVector ComplexMatrix::operator*(std::span<const cplx> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  ComplexVector y(rows_);
  apply(x, y);
  return y;
}

IndexedSum ComplexMatrix::max_column_abs_sum() const {
  IndexedSum best;
  for (std::size_t c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    if (c == 0 || s > best.value) best = {c, s};
  }
  return best;
}

IndexedSum ComplexMatrix::max_row_abs_sum() const {
  IndexedSum best;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (const cplx& z : row(r)) s += std::abs(z);
    if (r == 0 || s > best.value) best = {r, s};
  }
  return best;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) { return z == cplx{}; });
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

ComplexMatrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  ComplexMatrix P(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("not a permutation");
    seen[perm[j]] = true;
    P(perm[j], j) = 1.0;
  }
  return P;
}

}  // namespace fpnorm
