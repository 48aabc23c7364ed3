#include "fpnorm/folner.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace fpnorm {

QuotientSetupZ::QuotientSetupZ(std::int64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("quotient modulus must be >= 2; got " + std::to_string(m));
}

std::int64_t QuotientSetupZ::section(std::int64_t j) const {
  if (j < 0 || j >= m_) throw std::out_of_range("section index " + std::to_string(j) + " outside Z_m");
  return j;
}

std::int64_t QuotientSetupZ::residue(std::int64_t n) const noexcept { return ((n % m_) + m_) % m_; }

std::int64_t QuotientSetupZ::cocycle(std::int64_t t, std::int64_t r) const {
  return section(t) + section(r) - section((t + r) % m_);
}

std::vector<std::int64_t> QuotientSetupZ::cocycle_image() const {
  std::set<std::int64_t> image;
  for (std::int64_t t = 0; t < m_; ++t)
    for (std::int64_t r = 0; r < m_; ++r) image.insert(cocycle(t, r));
  return {image.begin(), image.end()};
}

std::vector<std::int64_t> QuotientSetupZ::cocycle_image_for(std::int64_t s) const {
  std::set<std::int64_t> image;
  for (std::int64_t t = 0; t < m_; ++t) image.insert(cocycle(s, t));
  return {image.begin(), image.end()};
}

bool QuotientSetupZ::cocycle_identity_holds() const {
  for (std::int64_t t = 0; t < m_; ++t)
    for (std::int64_t r = 0; r < m_; ++r)
      if (cocycle(t, r) + section((t + r) % m_) != section(t) + section(r)) return false;
  return true;
}

FolnerSequenceZ::FolnerSequenceZ(std::int64_t m) : m_(m) {
  if (m < 1) throw std::invalid_argument("Folner modulus must be >= 1");
}

std::vector<std::int64_t> FolnerSequenceZ::set(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("Folner index k must be >= 1; got " + std::to_string(k));
  std::vector<std::int64_t> out(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = i * m_;
  return out;
}

Rational FolnerSequenceZ::symmetric_difference_ratio(std::int64_t k, std::int64_t x) const {
  const std::vector<std::int64_t> F = set(k);
  std::vector<std::int64_t> shifted(F);
  for (auto& v : shifted) v += x;
  std::vector<std::int64_t> diff;
  std::set_symmetric_difference(F.begin(), F.end(), shifted.begin(), shifted.end(), std::back_inserter(diff));
  return Rational(static_cast<std::int64_t>(diff.size()), k);
}

LaurentElement folner_average(std::int64_t k, std::int64_t m) {
  std::map<std::int64_t, cplx> coeffs;
  for (std::int64_t n : FolnerSequenceZ(m).set(k)) coeffs[n] = 1.0 / static_cast<double>(k);
  return LaurentElement(std::move(coeffs));
}

namespace {

std::int64_t require_standard_cyclic(const GroupAlgebraElement& f) {
  if (!f.group().is_standard_cyclic())
    throw std::invalid_argument("expected an element of the standard cyclic group Z_m");
  return static_cast<std::int64_t>(f.group().order());
}

}  // namespace

LaurentElement folner_lift(const GroupAlgebraElement& f, std::int64_t k) {
  const std::int64_t m = require_standard_cyclic(f);
  const QuotientSetupZ setup(m);
  const std::vector<std::int64_t> F = FolnerSequenceZ(m).set(k);
  std::map<std::int64_t, cplx> coeffs;
  for (std::int64_t s = 0; s < m; ++s) {
    const cplx c = f[static_cast<std::size_t>(s)] / static_cast<double>(k);
    for (std::int64_t n : F) coeffs[n + setup.section(s)] += c;
  }
  return LaurentElement(std::move(coeffs));
}

GroupAlgebraElement push_to_quotient(const LaurentElement& g, std::int64_t m) {
  const QuotientSetupZ setup(m);
  ComplexVector coeffs(static_cast<std::size_t>(m));
  for (const auto& [n, c] : g.coefficients()) coeffs[static_cast<std::size_t>(setup.residue(n))] += c;
  return GroupAlgebraElement(FiniteGroup::cyclic(static_cast<std::size_t>(m)), std::move(coeffs));
}

LaurentElement random_lift(const GroupAlgebraElement& f, std::uint64_t seed, std::int64_t spread) {
  const std::int64_t m = require_standard_cyclic(f);
  if (spread < 0) throw std::invalid_argument("lift spread must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::map<std::int64_t, cplx> coeffs;
  for (std::int64_t s = 0; s < m; ++s) {
    cplx rest = f[static_cast<std::size_t>(s)];
    for (std::int64_t j = -spread; j <= spread; ++j) {
      if (j == 0) continue;
      const cplx w(unit(rng), unit(rng));
      coeffs[s + m * j] = w;
      rest -= w;
    }
    coeffs[s] = rest;
  }
  return LaurentElement(std::move(coeffs));
}

ThetaOperator::ThetaOperator(std::int64_t k, std::int64_t m, std::int64_t s) : setup_(m), k_(k), s_(s) {
  if (k < 1) throw std::invalid_argument("Folner index k must be >= 1");
  setup_.section(s);
}

std::map<std::int64_t, std::int64_t> ThetaOperator::column(std::int64_t j) const {
  const std::int64_t m = setup_.modulus();
  const std::int64_t t = setup_.residue(j);
  const std::int64_t l = (j - t) / m;
  const std::int64_t x = setup_.cocycle(s_, t);
  const std::int64_t y = setup_.section((s_ + t) % m) + m * l;
  std::map<std::int64_t, std::int64_t> col;
  for (std::int64_t n : FolnerSequenceZ(m).set(k_)) {
    col[n + x + y] += 1;
    col[n + y] -= 1;
  }
  std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
  return col;
}

Rational ThetaOperator::column_l1(std::int64_t j) const {
  std::int64_t total = 0;
  for (const auto& [row, count] : column(j)) total += std::abs(count);
  return Rational(total, k_);
}

Rational ThetaOperator::l1_norm_on(TruncationWindow window) const {
  Rational best(0);
  for (std::int64_t j = -window.half_width(); j <= window.half_width(); ++j) best = std::max(best, column_l1(j));
  return best;
}

SparseMatrix ThetaOperator::section(TruncationWindow window) const {
  const std::int64_t L = window.half_width();
  std::vector<SparseEntry> entries;
  for (std::int64_t j = -L; j <= L; ++j)
    for (const auto& [row, count] : column(j))
      if (row >= -L && row <= L)
        entries.push_back({window.index(row), window.index(j),
                           cplx(static_cast<double>(count) / static_cast<double>(k_), 0.0)});
  return SparseMatrix(window.size(), window.size(), std::move(entries));
}

Rational theta_l1(std::int64_t k, std::int64_t m, std::int64_t s) {
  const QuotientSetupZ setup(m);
  const FolnerSequenceZ folner(m);
  Rational best(0);
  for (std::int64_t x : setup.cocycle_image_for(s)) best = std::max(best, folner.symmetric_difference_ratio(k, x));
  return best;
}

Rational theta_l1(std::int64_t k, std::int64_t m) {
  Rational best(0);
  for (std::int64_t s = 0; s < m; ++s) best = std::max(best, theta_l1(k, m, s));
  return best;
}

namespace {

double bound_from(Rational l1, PExponent p) {
  if (p.is_infinite()) throw std::invalid_argument("theta bound requires p < inf");
  return 2.0 * std::pow(boost::rational_cast<double>(l1), p.reciprocal());
}

}  // namespace

double theta_p_bound(std::int64_t k, std::int64_t m, std::int64_t s, PExponent p) {
  return bound_from(theta_l1(k, m, s), p);
}

double theta_p_bound(std::int64_t k, std::int64_t m, PExponent p) { return bound_from(theta_l1(k, m), p); }

}  // namespace fpnorm
