#pragma once

// Generic l^p -> l^p norm estimation for any linear operator exposing
// apply / apply_adjoint. Dense matrices, banded Toeplitz sections and sparse
// windowed operators all go through the same code.

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpnorm {

template <class Op>
concept LinearOperator = requires(const Op& op, std::span<const cplx> in, std::span<cplx> out) {
  { op.rows() } -> std::convertible_to<std::size_t>;
  { op.cols() } -> std::convertible_to<std::size_t>;
  op.apply(in, out);
  op.apply_adjoint(in, out);
  { op.max_column_abs_sum() } -> std::same_as<IndexedSum>;
  { op.max_row_abs_sum() } -> std::same_as<IndexedSum>;
};

struct PowerIterationOptions {
  int random_starts = 32;
  std::uint64_t seed = 0;
  /// Stop once the relative change of the estimate drops below this.
  double tol = 1e-12;
  int max_iterations = 10000;
  bool ones_start = true;
  bool basis_starts = true;
  /// Caller-supplied starting vectors, tried before the generated ones.
  std::vector<ComplexVector> extra_starts;
};

double vector_pnorm(std::span<const cplx> x, PExponent p);

/// psi_r(v)_i = |v_i|^{r-1} * phase(v_i), phase(0) = 0.
ComplexVector duality_map(std::span<const cplx> v, double r);

/// ||A||_{p0}^{1-theta} ||A||_{p1}^{theta} with 1/p = (1-theta)/p0 + theta/p1,
/// rounded up by a few ulps and capped at max(norm0, norm1).
/// Throws std::invalid_argument if 1/p is not between 1/p0 and 1/p1.
double riesz_thorin_bound(PExponent p, PExponent p0, double norm0, PExponent p1, double norm1);

/// Best Riesz-Thorin bound from the three endpoint norms.
double interpolation_upper(PExponent p, double norm1, double norm2, double norm_inf);

namespace detail {

struct PowerRun {
  double estimate = 0.0;
  ComplexVector x;
  bool converged = false;
  int iterations = 0;
  int violations = 0;
};

/// Relative error bound for ||y||_p evaluated over n entries; the power
/// estimate is rounded down by this much so the lower bound stays below.
inline double norm_rounding(std::size_t n) {
  return (static_cast<double>(n) + 8.0) * std::numeric_limits<double>::epsilon();
}

inline double max_modulus(std::span<const cplx> v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

inline void normalize(ComplexVector& x, PExponent p) {
  const double n = vector_pnorm(x, p);
  if (n > 0.0)
    for (cplx& z : x) z /= n;
}

/// One run of the p-norm power method from x0:
///   y = A x,  z = A^H psi_p(y),  x <- psi_{p'}(z) / ||.||_p.
/// The estimate ||A x||_p is nondecreasing; any decrease beyond rounding is
/// counted and the best iterate is kept.
template <LinearOperator Op>
PowerRun power_iterate(const Op& A, PExponent p, ComplexVector x, double tol, int max_iterations) {
  PowerRun run;
  const double pv = p.value();
  const double qv = p.conjugate().value();
  normalize(x, p);
  if (max_modulus(x) == 0.0) return run;

  ComplexVector y(A.rows()), z(A.cols());
  A.apply(x, y);
  double estimate = vector_pnorm(y, p);
  run.estimate = estimate;
  run.x = x;

  for (int it = 1; it <= max_iterations; ++it) {
    run.iterations = it;
    const double ymax = max_modulus(y);
    if (ymax == 0.0) {
      run.converged = true;
      break;
    }
    for (cplx& v : y) v /= ymax;
    const ComplexVector w = duality_map(y, pv);
    A.apply_adjoint(w, z);
    const double zmax = max_modulus(z);
    if (zmax == 0.0) {
      run.converged = true;
      break;
    }
    for (cplx& v : z) v /= zmax;
    x = duality_map(z, qv);
    normalize(x, p);
    A.apply(x, y);
    const double next = vector_pnorm(y, p);

    if (next < estimate * (1.0 - 1e-12)) ++run.violations;
    if (next > run.estimate) {
      run.estimate = next;
      run.x = x;
    }
    const double change = std::abs(next - estimate) / std::max(next, 1e-300);
    estimate = next;
    if (change < tol) {
      run.converged = true;
      break;
    }
  }
  return run;
}

template <LinearOperator Op>
std::vector<ComplexVector> start_vectors(const Op& A, const PowerIterationOptions& opt) {
  const std::size_t n = A.cols();
  std::vector<ComplexVector> starts = opt.extra_starts;
  for (const auto& s : starts)
    if (s.size() != n) throw std::invalid_argument("start vector length does not match operator columns");
  if (opt.ones_start) starts.emplace_back(n, cplx(1.0, 0.0));
  if (opt.basis_starts) {
    for (std::size_t j = 0; j < n; ++j) {
      ComplexVector e(n);
      e[j] = 1.0;
      starts.push_back(std::move(e));
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int r = 0; r < opt.random_starts; ++r) {
    ComplexVector v(n);
    for (cplx& c : v) c = cplx(unit(rng), unit(rng));
    starts.push_back(std::move(v));
  }
  return starts;
}

}  // namespace detail

/// Multistart p-norm power iteration; p must lie in (1, inf).
/// Returns lower = max over starts of ||A x||_p with ||x||_p = 1, upper = +inf.
template <LinearOperator Op>
CertifiedInterval operator_pnorm_lower(const Op& A, PExponent p, const PowerIterationOptions& opt = {}) {
  if (p.is_one() || p.is_infinite())
    throw std::invalid_argument("power iteration requires p in (1, inf); got p = " + p.to_string());
  CertifiedInterval out;
  out.p = p;
  out.converged = false;
  bool any = false;
  for (ComplexVector& start : detail::start_vectors(A, opt)) {
    detail::PowerRun run = detail::power_iterate(A, p, std::move(start), opt.tol, opt.max_iterations);
    out.iterations += run.iterations;
    out.monotonicity_violations += run.violations;
    if (run.x.empty()) continue;
    if (!any || run.estimate > out.lower) {
      out.lower = run.estimate;
      out.witness = std::move(run.x);
      out.converged = run.converged;
      any = true;
    }
  }
  if (!any) {
    out.witness.assign(A.cols(), cplx{});
    if (!out.witness.empty()) out.witness[0] = 1.0;
    out.converged = true;
  }
  out.lower *= 1.0 - detail::norm_rounding(A.rows());
  return out;
}

/// Exact norm at p in {1, 2, inf}. p = 1 and p = inf use column / row sums;
/// p = 2 iterates on A^H A. An unconverged p = 2 run keeps its estimate as
/// `lower` and falls back to sqrt(||A||_1 ||A||_inf) for `upper`.
template <LinearOperator Op>
CertifiedInterval operator_pnorm_exact(const Op& A, PExponent p, const PowerIterationOptions& opt = {}) {
  if (!p.is_endpoint())
    throw std::invalid_argument("exact p-norm is only available for p in {1, 2, inf}; got p = " + p.to_string());
  CertifiedInterval out;
  out.p = p;
  const std::size_t n = A.cols();
  if (p.is_one()) {
    const IndexedSum col = A.max_column_abs_sum();
    out.lower = out.upper = col.value;
    out.witness.assign(n, cplx{});
    if (n > 0) out.witness[col.index] = 1.0;
    return out;
  }
  if (p.is_infinite()) {
    const IndexedSum row_sum = A.max_row_abs_sum();
    out.lower = out.upper = row_sum.value;
    out.witness.assign(n, cplx(1.0, 0.0));
    if (A.rows() == 0) return out;
    ComplexVector e(A.rows()), row(n);
    e[row_sum.index] = 1.0;
    A.apply_adjoint(e, row);  // row_j = conj(A_ij)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(row[j]) > 0.0) out.witness[j] = row[j] / std::abs(row[j]);
    return out;
  }
  CertifiedInterval run = operator_pnorm_lower(A, p, opt);
  out.lower = run.lower;
  out.witness = std::move(run.witness);
  out.converged = run.converged;
  out.iterations = run.iterations;
  out.monotonicity_violations = run.monotonicity_violations;
  out.upper = out.converged ? out.lower * (1.0 + 2.0 * detail::norm_rounding(A.rows()))
                            : std::max(out.lower, std::sqrt(A.max_column_abs_sum().value * A.max_row_abs_sum().value));
  return out;
}

namespace detail {
/// Lower may exceed the upper bound only through rounding in ||A x||_p;
/// the estimate is clamped, the bound kept.
inline void reconcile(CertifiedInterval& c) {
  if (c.lower > c.upper) {
    if (c.lower - c.upper > 1e-10 * (1.0 + c.upper))
      throw std::logic_error("certified lower bound exceeds upper bound beyond rounding");
    c.lower = c.upper;
  }
}
}  // namespace detail

/// Certified bracket: exact at p in {1, 2, inf}; otherwise power-iteration
/// lower bound and Riesz-Thorin upper bound over the endpoint pairs.
template <LinearOperator Op>
CertifiedInterval operator_pnorm(const Op& A, PExponent p, const PowerIterationOptions& opt = {}) {
  const double n1 = A.max_column_abs_sum().value;
  if (n1 == 0.0) {
    CertifiedInterval zero;
    zero.p = p;
    zero.lower = zero.upper = 0.0;
    zero.witness.assign(A.cols(), cplx{});
    if (!zero.witness.empty()) zero.witness[0] = 1.0;
    return zero;
  }
  if (p.is_endpoint()) return operator_pnorm_exact(A, p, opt);

  CertifiedInterval out = operator_pnorm_lower(A, p, opt);
  const double ninf = A.max_row_abs_sum().value;
  const CertifiedInterval two = operator_pnorm_exact(A, PExponent(2.0), opt);
  out.upper = interpolation_upper(p, n1, two.upper, ninf);
  detail::reconcile(out);
  return out;
}

}  // namespace fpnorm
