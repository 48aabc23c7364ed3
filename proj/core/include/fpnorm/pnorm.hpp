#pragma once

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/exponent.hpp"
#include "fpnorm/operator_norm.hpp"

#include <span>
#include <utility>

namespace fpnorm {

/// Closed-form ||A||_p for p in {1, 2, inf}; throws std::invalid_argument otherwise.
double pnorm_exact(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt = {});

/// Multistart power-iteration lower bound (upper = +inf). Requires A != 0
/// and p in (1, inf).
CertifiedInterval pnorm_lower(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt = {});

/// Riesz-Thorin upper bound from two exact endpoints drawn from {1, 2, inf}.
double pnorm_upper_interp(const ComplexMatrix& A, PExponent p, std::pair<PExponent, PExponent> endpoints,
                          const PowerIterationOptions& opt = {});

CertifiedInterval pnorm(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt = {});

/// ||A||_p and ||A^T||_{p'} certify overlapping intervals.
bool transpose_dual_check(const ComplexMatrix& A, PExponent p, double tol = 1e-7,
                          const PowerIterationOptions& opt = {});

/// |  ||A w||_p / ||w||_p - c.lower  | <= tol * (1 + c.lower).
bool witness_attains_lower(const ComplexMatrix& A, const CertifiedInterval& c, double tol = 1e-9);

}  // namespace fpnorm
