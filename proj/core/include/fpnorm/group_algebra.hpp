#pragma once

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/exponent.hpp"
#include "fpnorm/finite_group.hpp"
#include "fpnorm/operator_norm.hpp"

#include <cstdint>
#include <vector>

namespace fpnorm {

/// Element sum_s f(s) u_s of the group algebra C[G].
class GroupAlgebraElement {
public:
  /// Throws std::invalid_argument if coefficients.size() != group.order().
  GroupAlgebraElement(FiniteGroup group, ComplexVector coefficients);

  static GroupAlgebraElement zero(const FiniteGroup& g);
  static GroupAlgebraElement delta(const FiniteGroup& g, std::size_t s, cplx c = 1.0);
  /// Uniform probability vector 1/|G|.
  static GroupAlgebraElement uniform(const FiniteGroup& g);
  /// Re and Im parts uniform in [-1, 1].
  static GroupAlgebraElement random(const FiniteGroup& g, std::uint64_t seed);
  /// Coefficients uniform in [0, 1).
  static GroupAlgebraElement random_nonnegative(const FiniteGroup& g, std::uint64_t seed);

  const FiniteGroup& group() const noexcept { return group_; }
  const ComplexVector& coefficients() const noexcept { return coeffs_; }
  cplx operator[](std::size_t s) const { return coeffs_[s]; }
  double l1_norm() const;
  bool is_nonnegative() const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(cplx c, const GroupAlgebraElement& a);

private:
  FiniteGroup group_;
  ComplexVector coeffs_;
};

/// (f * g)(t) = sum_s f(s) g(s^{-1} t).
GroupAlgebraElement convolve(const GroupAlgebraElement& f, const GroupAlgebraElement& g);

/// Matrix of lambda(f) on the basis {delta_s}: M[t][s] = f(t s^{-1}).
ComplexMatrix regular_rep(const GroupAlgebraElement& f);

/// ||lambda_p(f)|| as a certified interval.
CertifiedInterval fp_lambda_norm(const GroupAlgebraElement& f, PExponent p, const PowerIterationOptions& opt = {});

/// f^(s) = f(s^{-1}); regular_rep(involution(f)) == transpose(regular_rep(f)).
GroupAlgebraElement involution(const GroupAlgebraElement& f);

/// Transports f along an injective homomorphism H -> G (zero off the image).
/// Throws std::invalid_argument if iota is not injective or f lives elsewhere.
GroupAlgebraElement subgroup_embed(const GroupAlgebraElement& f, const GroupHomomorphism& iota);

/// Ordering of G by right cosets H x. Block b lists iota(h) * reps[b] for
/// h = 0..|H|-1; reps[b] is the smallest index in its coset. Left
/// multiplication by the image of H preserves each block.
struct CosetDecomposition {
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> order;  // position -> element of G

  /// P with (P M P^{-1})[i][j] = M[order[i]][order[j]].
  ComplexMatrix permutation() const;
};

CosetDecomposition coset_decomposition(const GroupHomomorphism& iota);

/// Direct sum of `copies` copies of a square block.
ComplexMatrix block_diagonal(const ComplexMatrix& block, std::size_t copies);

/// P regular_rep(iota(f)) P^{-1} == block_diagonal(regular_rep(f), [G:H]), entrywise exact.
bool coset_block_identity(const GroupAlgebraElement& f, const GroupHomomorphism& iota);

/// (pi f)(q) = sum over the fibre pi(s) = q of f(s). Requires a surjective pi.
GroupAlgebraElement quotient_push(const GroupAlgebraElement& f, const GroupHomomorphism& pi);

/// For f with nonnegative real coefficients: the certificates at p and at 2
/// overlap within tol. Throws std::invalid_argument on negative or complex
/// coefficients.
bool positive_norm_check(const GroupAlgebraElement& f, PExponent p, double tol = 1e-7,
                         const PowerIterationOptions& opt = {});

}  // namespace fpnorm
