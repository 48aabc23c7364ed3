#include "fpnorm/group_algebra.hpp"

#include "fpnorm/pnorm.hpp"

#include <random>
#include <stdexcept>

namespace fpnorm {

GroupAlgebraElement::GroupAlgebraElement(FiniteGroup group, ComplexVector coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_.order())
    throw std::invalid_argument("expected " + std::to_string(group_.order()) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
}

GroupAlgebraElement GroupAlgebraElement::zero(const FiniteGroup& g) { return {g, ComplexVector(g.order())}; }

GroupAlgebraElement GroupAlgebraElement::delta(const FiniteGroup& g, std::size_t s, cplx c) {
  if (s >= g.order()) throw std::invalid_argument("group element out of range");
  ComplexVector v(g.order());
  v[s] = c;
  return {g, std::move(v)};
}

GroupAlgebraElement GroupAlgebraElement::uniform(const FiniteGroup& g) {
  return {g, ComplexVector(g.order(), cplx(1.0 / static_cast<double>(g.order()), 0.0))};
}

GroupAlgebraElement GroupAlgebraElement::random(const FiniteGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector v(g.order());
  for (cplx& c : v) c = cplx(u(rng), u(rng));
  return {g, std::move(v)};
}

GroupAlgebraElement GroupAlgebraElement::random_nonnegative(const FiniteGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ComplexVector v(g.order());
  for (cplx& c : v) c = u(rng);
  return {g, std::move(v)};
}

double GroupAlgebraElement::l1_norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::abs(c);
  return s;
}

bool GroupAlgebraElement::is_nonnegative() const {
  for (const cplx& c : coeffs_)
    if (c.imag() != 0.0 || c.real() < 0.0) return false;
  return true;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("elements live on different groups");
  ComplexVector v = a.coefficients();
  for (std::size_t s = 0; s < v.size(); ++s) v[s] += b[s];
  return {a.group(), std::move(v)};
}

GroupAlgebraElement operator*(cplx c, const GroupAlgebraElement& a) {
  ComplexVector v = a.coefficients();
  for (cplx& z : v) z *= c;
  return {a.group(), std::move(v)};
}

GroupAlgebraElement convolve(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  if (!(f.group() == g.group())) throw std::invalid_argument("elements live on different groups");
  const FiniteGroup& G = f.group();
  ComplexVector out(G.order());
  for (std::size_t s = 0; s < G.order(); ++s) {
    if (f[s] == cplx{}) continue;
    for (std::size_t h = 0; h < G.order(); ++h) out[G.multiply(s, h)] += f[s] * g[h];
  }
  return {G, std::move(out)};
}

ComplexMatrix regular_rep(const GroupAlgebraElement& f) {
  const FiniteGroup& G = f.group();
  const std::size_t n = G.order();
  ComplexMatrix M(n, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s) M(t, s) = f[G.multiply(t, G.inverse(s))];
  return M;
}

CertifiedInterval fp_lambda_norm(const GroupAlgebraElement& f, PExponent p, const PowerIterationOptions& opt) {
  return pnorm(regular_rep(f), p, opt);
}

GroupAlgebraElement involution(const GroupAlgebraElement& f) {
  const FiniteGroup& G = f.group();
  ComplexVector v(G.order());
  for (std::size_t s = 0; s < G.order(); ++s) v[s] = f[G.inverse(s)];
  return {G, std::move(v)};
}

GroupAlgebraElement subgroup_embed(const GroupAlgebraElement& f, const GroupHomomorphism& iota) {
  if (!(f.group() == iota.source())) throw std::invalid_argument("element does not live on the source group");
  if (!iota.is_injective()) throw std::invalid_argument("subgroup embedding must be injective");
  ComplexVector v(iota.target().order());
  for (std::size_t h = 0; h < f.group().order(); ++h) v[iota(h)] = f[h];
  return {iota.target(), std::move(v)};
}

CosetDecomposition coset_decomposition(const GroupHomomorphism& iota) {
  if (!iota.is_injective()) throw std::invalid_argument("subgroup embedding must be injective");
  const FiniteGroup& G = iota.target();
  const std::size_t nh = iota.source().order();
  CosetDecomposition d;
  std::vector<bool> placed(G.order(), false);
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (placed[x]) continue;
    d.representatives.push_back(x);
    for (std::size_t h = 0; h < nh; ++h) {
      const std::size_t g = G.multiply(iota(h), x);
      placed[g] = true;
      d.order.push_back(g);
    }
  }
  return d;
}

ComplexMatrix CosetDecomposition::permutation() const {
  // P e_{order[i]} = e_i.
  std::vector<std::size_t> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = i;
  return permutation_matrix(perm);
}

ComplexMatrix block_diagonal(const ComplexMatrix& block, std::size_t copies) {
  const std::size_t b = block.rows();
  if (block.cols() != b) throw std::invalid_argument("block must be square");
  ComplexMatrix out(b * copies, b * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) out(c * b + i, c * b + j) = block(i, j);
  return out;
}

bool coset_block_identity(const GroupAlgebraElement& f, const GroupHomomorphism& iota) {
  const CosetDecomposition d = coset_decomposition(iota);
  const ComplexMatrix P = d.permutation();
  const ComplexMatrix conjugated = P * regular_rep(subgroup_embed(f, iota)) * P.transpose();
  return conjugated == block_diagonal(regular_rep(f), d.representatives.size());
}

GroupAlgebraElement quotient_push(const GroupAlgebraElement& f, const GroupHomomorphism& pi) {
  if (!(f.group() == pi.source())) throw std::invalid_argument("element does not live on the source group");
  if (!pi.is_surjective()) throw std::invalid_argument("quotient map must be surjective");
  ComplexVector v(pi.target().order());
  for (std::size_t s = 0; s < f.group().order(); ++s) v[pi(s)] += f[s];
  return {pi.target(), std::move(v)};
}

bool positive_norm_check(const GroupAlgebraElement& f, PExponent p, double tol, const PowerIterationOptions& opt) {
  if (!f.is_nonnegative()) throw std::invalid_argument("positive_norm_check needs nonnegative real coefficients");
  return overlaps(fp_lambda_norm(f, p, opt), fp_lambda_norm(f, PExponent(2.0), opt), tol);
}

}  // namespace fpnorm
