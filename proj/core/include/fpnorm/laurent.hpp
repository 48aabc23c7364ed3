#pragma once

// Finite-section realisation of F^p(Z): Laurent elements, their banded
// Toeplitz compressions to windows [-L, L], and certified norm brackets.

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/exponent.hpp"
#include "fpnorm/operator_norm.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace fpnorm {

/// Finitely supported f: Z -> C. Exact zeros are dropped, so the stored
/// support is exactly where f is nonzero.
class LaurentElement {
public:
  LaurentElement() = default;
  explicit LaurentElement(std::map<std::int64_t, cplx> coefficients);

  static LaurentElement delta(std::int64_t n, cplx c = 1.0);

  const std::map<std::int64_t, cplx>& coefficients() const noexcept { return coeffs_; }
  cplx operator[](std::int64_t n) const;
  bool empty() const noexcept { return coeffs_.empty(); }
  std::int64_t min_offset() const;
  std::int64_t max_offset() const;
  /// max |n| over the support (0 when empty).
  std::int64_t radius() const;
  /// max - min offset (0 when empty).
  std::int64_t diameter() const;
  double l1_norm() const;
  bool is_nonnegative() const;

  /// sum_n f(n) e^{i n theta}.
  cplx symbol(double theta) const;

  friend LaurentElement convolve(const LaurentElement& a, const LaurentElement& b);

private:
  std::map<std::int64_t, cplx> coeffs_;
};

/// Window [-L, L] of Z, basis delta_{-L}, ..., delta_{L}.
class TruncationWindow {
public:
  /// Throws std::invalid_argument if half_width < 1.
  explicit TruncationWindow(std::int64_t half_width);
  std::int64_t half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(2 * half_width_ + 1); }
  /// Position of n in the window's basis.
  std::size_t index(std::int64_t n) const { return static_cast<std::size_t>(n + half_width_); }

private:
  std::int64_t half_width_;
};

/// Dense compression M[t][s] = f(t - s), t, s in [-L, L]. Throws
/// std::invalid_argument when L < radius(f).
ComplexMatrix truncated_rep(const LaurentElement& f, TruncationWindow window);

/// Matrix-free form of truncated_rep: O(|support| * (2L+1)) per product.
class ToeplitzSection {
public:
  ToeplitzSection(const LaurentElement& f, TruncationWindow window);

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return n_; }
  void apply(std::span<const cplx> x, std::span<cplx> y) const;
  void apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const;
  IndexedSum max_column_abs_sum() const;
  IndexedSum max_row_abs_sum() const;

private:
  std::vector<std::int64_t> offsets_;
  std::vector<cplx> taps_;
  std::size_t n_;
};

struct SymbolSup {
  double value = 0.0;
  double theta = 0.0;
};

/// max over |z| = 1 of |sum f(n) z^n|: a uniform grid (at least `grid`
/// points, denser for wide supports) followed by golden-section refinement
/// around the best grid maxima. Nonnegative f returns l1_norm exactly.
SymbolSup symbol_sup(const LaurentElement& f, std::size_t grid = 4096);

struct SectionOptions {
  SectionOptions();

  PowerIterationOptions power;
  /// Each pattern q of length m seeds the start x_n = q[n mod m] * env(n),
  /// env a sin^{2/p} taper vanishing at the window edges.
  std::vector<ComplexVector> periodic_patterns;
  /// Adds tapered starts: constant, and modulated at the symbol's peak.
  bool tapered_starts = true;
  std::size_t symbol_grid = 4096;
};

/// Certified bracket for ||lambda_p(f)|| on l^p(Z).
///
/// lower: power-iteration estimate on the window's section (a compression,
/// so never above the true norm). upper: Riesz-Thorin between ||f||_1
/// (p = 1 and p = inf) and symbol_sup (p = 2).
CertifiedInterval fpz_norm(const LaurentElement& f, PExponent p, TruncationWindow window,
                           const SectionOptions& opt = {});

/// fpz_norm over increasing windows; each window is warm-started from the
/// previous witness, so the lower bounds are nondecreasing.
std::vector<CertifiedInterval> fpz_norm_sweep(const LaurentElement& f, PExponent p,
                                              std::span<const TruncationWindow> windows,
                                              const SectionOptions& opt = {});

/// x_n = pattern[n mod m] * sin(pi (n + L + 1) / (2L + 2))^{2/p} on [-L, L].
ComplexVector tapered_periodic_start(std::span<const cplx> pattern, TruncationWindow window, PExponent p);

}  // namespace fpnorm
