#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace fpnorm {

using MultiplicationTable = std::vector<std::vector<std::size_t>>;

/// Finite group given by its Cayley table. Elements are the indices 0..n-1.
/// Cheap to copy: the validated table is shared and immutable.
class FiniteGroup {
public:
  /// Validates closure, associativity (all triples), two-sided identity and
  /// inverses. Throws std::invalid_argument naming the first failure.
  explicit FiniteGroup(MultiplicationTable table, std::string name = {});

  /// Z_n with multiply(a, b) = (a + b) mod n.
  static FiniteGroup cyclic(std::size_t n);
  /// S_n on {0..n-1}, elements in lexicographic order, (a*b)(x) = a(b(x)).
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const noexcept { return impl_->table.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return impl_->table[a][b]; }
  std::size_t inverse(std::size_t a) const { return impl_->inverse[a]; }
  std::size_t identity() const noexcept { return impl_->identity; }
  const MultiplicationTable& table() const noexcept { return impl_->table; }
  const std::string& name() const noexcept { return impl_->name; }

  bool is_abelian() const;
  /// True when the labelling is the standard one of Z_n: a*b = (a+b) mod n.
  bool is_standard_cyclic() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.impl_ == b.impl_ || a.impl_->table == b.impl_->table;
  }

private:
  struct Impl {
    MultiplicationTable table;
    std::vector<std::size_t> inverse;
    std::size_t identity = 0;
    std::string name;
  };
  std::shared_ptr<const Impl> impl_;
};

/// A map between finite groups, validated as a homomorphism on construction.
class GroupHomomorphism {
public:
  /// Throws std::invalid_argument if images has the wrong length, points
  /// outside the target, or phi(a*b) != phi(a)*phi(b) for some pair.
  GroupHomomorphism(FiniteGroup source, FiniteGroup target, std::vector<std::size_t> images);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t s) const { return images_[s]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_injective() const;
  bool is_surjective() const;

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<std::size_t> images_;
};

/// Z_n -> Z_{mn}, 1 -> m.
GroupHomomorphism cyclic_inclusion(std::size_t n, std::size_t m);
/// Z_n -> Z_d, s -> s mod d; requires d | n.
GroupHomomorphism cyclic_reduction(std::size_t n, std::size_t d);
/// Z_3 -> S_3 onto the rotations {id, (0 1 2), (0 2 1)}.
GroupHomomorphism rotations_in_s3();

}  // namespace fpnorm
