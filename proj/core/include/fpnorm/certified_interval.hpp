#pragma once

#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/exponent.hpp"

#include <limits>

namespace fpnorm {

/// Two-sided bracket for an operator norm ||A||_p.
///
/// `witness` is a unit vector in l^p with ||A witness||_p == lower (up to
/// rounding); `upper` may be +inf when no upper certificate was requested.
struct CertifiedInterval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  ComplexVector witness;
  PExponent p{2.0};
  bool converged = true;
  int iterations = 0;
  /// Per-step decreases of the power-iteration estimate beyond rounding.
  int monotonicity_violations = 0;

  double width() const noexcept { return upper - lower; }
  bool contains(double value, double tol = 0.0) const noexcept {
    return lower - tol <= value && value <= upper + tol;
  }
};

/// Intervals [a.lower, a.upper] and [b.lower, b.upper] intersect after
/// widening both by tol.
inline bool overlaps(const CertifiedInterval& a, const CertifiedInterval& b, double tol) noexcept {
  return a.lower <= b.upper + tol && b.lower <= a.upper + tol;
}

}  // namespace fpnorm
