#pragma once

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/group_algebra.hpp"
#include "fpnorm/operator_norm.hpp"

namespace fpnorm {

/// Element of F^p(Z_n) ~ C^n in diagonal (Gelfand) coordinates xi.
struct CirculantElement {
  ComplexVector gelfand;

  std::size_t size() const noexcept { return gelfand.size(); }
  double sup_norm() const;
};

/// u_n[j][k] = omega^{jk} / sqrt(n), omega = exp(2 pi i / n). Requires n >= 1.
ComplexMatrix dft_matrix(std::size_t n);

/// u_n diag(xi) u_n^{-1}.
ComplexMatrix circulant_matrix(const CirculantElement& xi);

CertifiedInterval circulant_norm(const CirculantElement& xi, PExponent p, const PowerIterationOptions& opt = {});

/// xi_k = sum_s f(s) conj(omega)^{ks}, chosen so that
/// circulant_matrix(to_gelfand(f)) == regular_rep(f). In particular
/// delta_1 maps to (1, conj(omega), conj(omega)^2, ...).
/// Throws std::invalid_argument unless f lives on a standard cyclic group.
CirculantElement to_gelfand(const GroupAlgebraElement& f);
GroupAlgebraElement from_gelfand(const CirculantElement& xi);

/// (x_0, ..., x_{n-1}) -> (x_{n-1}, x_0, ..., x_{n-2}).
CirculantElement cyclic_shift(const CirculantElement& xi);

}  // namespace fpnorm
