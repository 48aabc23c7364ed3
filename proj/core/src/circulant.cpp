#include "fpnorm/circulant.hpp"

#include "fpnorm/pnorm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpnorm {

namespace {

// omega_n^e with the exponent reduced mod n first.
cplx root_of_unity(std::size_t n, long long e) {
  const long long r = ((e % static_cast<long long>(n)) + static_cast<long long>(n)) % static_cast<long long>(n);
  // Quarter turns exactly, so small cases carry no trigonometric rounding.
  if ((4 * r) % static_cast<long long>(n) == 0) {
    static const cplx quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return quarter[4 * r / static_cast<long long>(n)];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

double CirculantElement::sup_norm() const {
  double m = 0.0;
  for (const cplx& z : gelfand) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dft_matrix needs n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) u(j, k) = scale * root_of_unity(n, static_cast<long long>(j * k));
  return u;
}

ComplexMatrix circulant_matrix(const CirculantElement& xi) {
  // Equal to u diag(xi) u^* but assembled from f = from_gelfand(xi) as
  // M[j][k] = f(j - k), which rounds once per coefficient instead of per entry.
  const GroupAlgebraElement f = from_gelfand(xi);
  const std::size_t n = xi.size();
  ComplexMatrix M(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) M(j, k) = f[(j + n - k) % n];
  return M;
}

CertifiedInterval circulant_norm(const CirculantElement& xi, PExponent p, const PowerIterationOptions& opt) {
  return pnorm(circulant_matrix(xi), p, opt);
}

CirculantElement to_gelfand(const GroupAlgebraElement& f) {
  if (!f.group().is_standard_cyclic()) throw std::invalid_argument("Gelfand coordinates need a cyclic group Z_n");
  const std::size_t n = f.group().order();
  CirculantElement xi{ComplexVector(n)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t s = 0; s < n; ++s) xi.gelfand[k] += f[s] * root_of_unity(n, -static_cast<long long>(k * s));
  return xi;
}

GroupAlgebraElement from_gelfand(const CirculantElement& xi) {
  const std::size_t n = xi.size();
  if (n == 0) throw std::invalid_argument("empty Gelfand vector");
  ComplexVector f(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) f[s] += xi.gelfand[k] * root_of_unity(n, static_cast<long long>(k * s));
    f[s] /= static_cast<double>(n);
  }
  return {FiniteGroup::cyclic(n), std::move(f)};
}

CirculantElement cyclic_shift(const CirculantElement& xi) {
  const std::size_t n = xi.size();
  CirculantElement out{ComplexVector(n)};
  for (std::size_t j = 0; j < n; ++j) out.gelfand[(j + 1) % n] = xi.gelfand[j];
  return out;
}

}  // namespace fpnorm
