#include "fpnorm/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpnorm {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

FiniteGroup::FiniteGroup(MultiplicationTable table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw std::invalid_argument("group table row " + str(a) + " has " + str(table[a].size()) +
                                  " entries, expected " + str(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw std::invalid_argument("group table entry (" + str(a) + ", " + str(b) + ") is out of range");
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) throw std::invalid_argument("group table has no two-sided identity");

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inverse[g] = h;
        break;
      }
    if (inverse[g] == n) throw std::invalid_argument("element " + str(g) + " has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("group table is not associative at (" + str(a) + ", " + str(b) + ", " +
                                      str(c) + ")");

  impl_ = std::make_shared<const Impl>(Impl{std::move(table), std::move(inverse), identity, std::move(name)});
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  MultiplicationTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), "Z_" + str(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t order = perms.size();
  MultiplicationTable t(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> q(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(q);
    }
  return FiniteGroup(std::move(t), "S_" + str(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  MultiplicationTable t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return FiniteGroup(std::move(t), a.name() + "x" + b.name());
}

bool FiniteGroup::is_abelian() const {
  const auto& t = table();
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

bool FiniteGroup::is_standard_cyclic() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (multiply(a, b) != (a + b) % n) return false;
  return true;
}

GroupHomomorphism::GroupHomomorphism(FiniteGroup source, FiniteGroup target, std::vector<std::size_t> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.order())
    throw std::invalid_argument("homomorphism needs one image per source element");
  for (std::size_t s = 0; s < images_.size(); ++s)
    if (images_[s] >= target_.order()) throw std::invalid_argument("image of " + str(s) + " is outside the target");
  for (std::size_t a = 0; a < source_.order(); ++a)
    for (std::size_t b = 0; b < source_.order(); ++b)
      if (images_[source_.multiply(a, b)] != target_.multiply(images_[a], images_[b]))
        throw std::invalid_argument("map is not a homomorphism at (" + str(a) + ", " + str(b) + ")");
}

bool GroupHomomorphism::is_injective() const {
  std::vector<bool> hit(target_.order(), false);
  for (std::size_t img : images_) {
    if (hit[img]) return false;
    hit[img] = true;
  }
  return true;
}

bool GroupHomomorphism::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (std::size_t img : images_) hit[img] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupHomomorphism cyclic_inclusion(std::size_t n, std::size_t m) {
  std::vector<std::size_t> images(n);
  for (std::size_t s = 0; s < n; ++s) images[s] = s * m;
  return GroupHomomorphism(FiniteGroup::cyclic(n), FiniteGroup::cyclic(n * m), std::move(images));
}

GroupHomomorphism cyclic_reduction(std::size_t n, std::size_t d) {
  if (d == 0 || n % d != 0) throw std::invalid_argument("reduction Z_n -> Z_d needs d | n");
  std::vector<std::size_t> images(n);
  for (std::size_t s = 0; s < n; ++s) images[s] = s % d;
  return GroupHomomorphism(FiniteGroup::cyclic(n), FiniteGroup::cyclic(d), std::move(images));
}

GroupHomomorphism rotations_in_s3() {
  // Lexicographic S_3: 0=012 1=021 2=102 3=120 4=201 5=210; 120 has order 3.
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  return GroupHomomorphism(FiniteGroup::cyclic(3), s3, {0, 3, 4});
}

}  // namespace fpnorm
