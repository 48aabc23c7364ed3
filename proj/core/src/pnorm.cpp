#include "fpnorm/pnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fpnorm {

double vector_pnorm(std::span<const cplx> x, PExponent p) {
  double scale = 0.0;
  for (const cplx& z : x) scale = std::max(scale, std::abs(z));
  if (p.is_infinite() || scale == 0.0) return scale;
  const double pv = p.value();
  double sum = 0.0;
  if (p.is_one()) {
    for (const cplx& z : x) sum += std::abs(z);
    return sum;
  }
  for (const cplx& z : x) {
    const double a = std::abs(z) / scale;
    if (a > 0.0) sum += std::pow(a, pv);
  }
  return scale * std::pow(sum, 1.0 / pv);
}

ComplexVector duality_map(std::span<const cplx> v, double r) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 0.0) out[i] = v[i] * (std::pow(a, r - 1.0) / a);
  }
  return out;
}

double riesz_thorin_bound(PExponent p, PExponent p0, double norm0, PExponent p1, double norm1) {
  const double r = p.reciprocal(), r0 = p0.reciprocal(), r1 = p1.reciprocal();
  if (r0 == r1) {
    if (r != r0) throw std::invalid_argument("interpolation endpoints coincide but p differs");
    return norm0;
  }
  const double lo = std::min(r0, r1), hi = std::max(r0, r1);
  if (r < lo || r > hi)
    throw std::invalid_argument("p = " + p.to_string() + " lies outside the interpolation interval [" +
                                p0.to_string() + ", " + p1.to_string() + "]");
  const double theta = (r0 - r) / (r0 - r1);
  if (theta == 0.0) return norm0;
  if (theta == 1.0) return norm1;
  if (norm0 == norm1) return norm0;
  if (norm0 == 0.0 || norm1 == 0.0) return 0.0;
  // Round outward past the error of pow and the product, but never above
  // the larger endpoint, which bounds the geometric mean exactly.
  const double product = std::pow(norm0, 1.0 - theta) * std::pow(norm1, theta);
  return std::min(product * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()), std::max(norm0, norm1));
}

double interpolation_upper(PExponent p, double norm1, double norm2, double norm_inf) {
  const PExponent one(1.0), two(2.0), inf = PExponent::infinity();
  if (p.is_one()) return norm1;
  if (p.is_two()) return norm2;
  if (p.is_infinite()) return norm_inf;
  double best = riesz_thorin_bound(p, one, norm1, inf, norm_inf);
  if (p.value() < 2.0)
    best = std::min(best, riesz_thorin_bound(p, one, norm1, two, norm2));
  else
    best = std::min(best, riesz_thorin_bound(p, two, norm2, inf, norm_inf));
  return best;
}

double pnorm_exact(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt) {
  const CertifiedInterval c = operator_pnorm_exact(A, p, opt);
  return c.lower;
}

CertifiedInterval pnorm_lower(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt) {
  if (A.is_zero()) throw std::invalid_argument("pnorm_lower requires a nonzero matrix");
  return operator_pnorm_lower(A, p, opt);
}

double pnorm_upper_interp(const ComplexMatrix& A, PExponent p, std::pair<PExponent, PExponent> endpoints,
                          const PowerIterationOptions& opt) {
  const auto [p0, p1] = endpoints;
  for (const PExponent& e : {p0, p1})
    if (!e.is_endpoint()) throw std::invalid_argument("interpolation endpoints must come from {1, 2, inf}");
  // Validate before paying for the endpoint norms.
  const double r = p.reciprocal(), r0 = p0.reciprocal(), r1 = p1.reciprocal();
  if (r < std::min(r0, r1) || r > std::max(r0, r1))
    throw std::invalid_argument("p = " + p.to_string() + " lies outside the interpolation interval");
  const auto endpoint_upper = [&](PExponent e) { return operator_pnorm_exact(A, e, opt).upper; };
  return riesz_thorin_bound(p, p0, endpoint_upper(p0), p1, endpoint_upper(p1));
}

CertifiedInterval pnorm(const ComplexMatrix& A, PExponent p, const PowerIterationOptions& opt) {
  return operator_pnorm(A, p, opt);
}

bool transpose_dual_check(const ComplexMatrix& A, PExponent p, double tol, const PowerIterationOptions& opt) {
  const CertifiedInterval direct = pnorm(A, p, opt);
  const CertifiedInterval dual = pnorm(A.transpose(), p.conjugate(), opt);
  return overlaps(direct, dual, tol);
}

bool witness_attains_lower(const ComplexMatrix& A, const CertifiedInterval& c, double tol) {
  const double wn = vector_pnorm(c.witness, c.p);
  if (wn == 0.0) return c.lower == 0.0;
  const double ratio = vector_pnorm(A * c.witness, c.p) / wn;
  return std::abs(ratio - c.lower) <= tol * (1.0 + c.lower);
}

}  // namespace fpnorm
