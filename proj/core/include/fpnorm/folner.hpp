#pragma once

// Quotient Z -> Z_m: section, 2-cocycle, Folner intervals in mZ, averages,
// lifts, and the correction operators theta_k with exact l^1 norms.

#include "fpnorm/exponent.hpp"
#include "fpnorm/group_algebra.hpp"
#include "fpnorm/laurent.hpp"
#include "fpnorm/sparse_matrix.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace fpnorm {

using Rational = boost::rational<std::int64_t>;

/// Z -> Z_m with section sigma(j) = j on {0, ..., m-1} and cocycle
/// c(t, r) = sigma(t) + sigma(r) - sigma(t + r mod m), valued in {0, m}.
class QuotientSetupZ {
public:
  /// Throws std::invalid_argument if m < 2.
  explicit QuotientSetupZ(std::int64_t m);

  std::int64_t modulus() const noexcept { return m_; }
  /// Throws std::out_of_range unless 0 <= j < m.
  std::int64_t section(std::int64_t j) const;
  /// n mod m in {0, ..., m-1}, also for negative n.
  std::int64_t residue(std::int64_t n) const noexcept;
  std::int64_t cocycle(std::int64_t t, std::int64_t r) const;

  /// Sorted values of c over all pairs.
  std::vector<std::int64_t> cocycle_image() const;
  /// Sorted values of c(s, t) over t for fixed s.
  std::vector<std::int64_t> cocycle_image_for(std::int64_t s) const;

  /// c(t, r) + sigma(t + r mod m) == sigma(t) + sigma(r) for every pair.
  bool cocycle_identity_holds() const;

private:
  std::int64_t m_;
};

/// F_k = {0, m, ..., (k-1) m} in mZ.
class FolnerSequenceZ {
public:
  explicit FolnerSequenceZ(std::int64_t m);

  std::int64_t modulus() const noexcept { return m_; }
  /// Throws std::invalid_argument if k < 1.
  std::vector<std::int64_t> set(std::int64_t k) const;
  /// |F_k symmetric-difference (F_k + x)| / |F_k|, counted exactly.
  Rational symmetric_difference_ratio(std::int64_t k, std::int64_t x) const;

private:
  std::int64_t m_;
};

/// T_k = (1/k) sum over n in F_k of delta_n.
LaurentElement folner_average(std::int64_t k, std::int64_t m);

/// f~_k = (1/k) sum_s sum_{n in F_k} f(s) delta_{n + sigma(s)} for f on Z_m.
/// Throws std::invalid_argument unless f lives on the standard Z_m and k >= 1.
LaurentElement folner_lift(const GroupAlgebraElement& f, std::int64_t k);

/// (pi g)(q) = sum over n = q mod m of g(n).
GroupAlgebraElement push_to_quotient(const LaurentElement& g, std::int64_t m);

/// A random g with push_to_quotient(g, m) == f (up to rounding): each f(s)
/// is split across the fibre points s + m j, |j| <= spread, with random
/// complex weights.
LaurentElement random_lift(const GroupAlgebraElement& f, std::uint64_t seed, std::int64_t spread = 3);

/// theta_k for a fixed s. On the basis of l^p(Z), with j = t + m l,
/// t = j mod m, x = c(s, t), y = sigma(s + t mod m) + m l:
///   theta(delta_j) = (1/k) sum_{n in F_k} (delta_{n + x + y} - delta_{n + y}).
/// Entries are stored as integer numerators over the common denominator k.
class ThetaOperator {
public:
  ThetaOperator(std::int64_t k, std::int64_t m, std::int64_t s);

  std::int64_t denominator() const noexcept { return k_; }
  /// Nonzero numerators of column j, keyed by row.
  std::map<std::int64_t, std::int64_t> column(std::int64_t j) const;
  /// l^1 norm of column j.
  Rational column_l1(std::int64_t j) const;
  /// Max column l^1 norm over the columns j in [-L, L] (untruncated rows).
  Rational l1_norm_on(TruncationWindow window) const;
  /// Compression to [-L, L] x [-L, L] as a floating-point sparse matrix.
  SparseMatrix section(TruncationWindow window) const;

private:
  QuotientSetupZ setup_;
  std::int64_t k_;
  std::int64_t s_;
};

/// max over x in Im c(s, .) of |F_k symmetric-difference (F_k + x)| / k.
Rational theta_l1(std::int64_t k, std::int64_t m, std::int64_t s);
/// max over s of theta_l1(k, m, s); 2/k for every m >= 2.
Rational theta_l1(std::int64_t k, std::int64_t m);

/// 2 * theta_l1(k, m, s)^{1/p}. Throws for p = inf.
double theta_p_bound(std::int64_t k, std::int64_t m, std::int64_t s, PExponent p);
/// 2 * theta_l1(k, m)^{1/p}.
double theta_p_bound(std::int64_t k, std::int64_t m, PExponent p);

}  // namespace fpnorm
