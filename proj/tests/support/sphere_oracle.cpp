#include "sphere_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace fpnorm::tst {

namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

double radical_inverse(std::size_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

class Objective {
public:
  Objective(const ComplexMatrix& A, double p) : A_(A), p_(p), n_(A.cols()), x_(n_) {}

  std::size_t dims() const { return 2 * (n_ - 1); }
  // params[0 .. n-2]: angles in [0, pi/2]; params[n-1 ..]: phases.
  double operator()(const std::vector<double>& params) {
    double carry = 1.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double w = carry;
      if (i + 1 < n_) {
        const double c = std::cos(params[i]);
        w = carry * c * c;
        carry *= 1.0 - c * c;
      }
      const double r = std::pow(std::max(w, 0.0), 1.0 / p_);
      const double phase = i == 0 ? 0.0 : params[n_ - 2 + i];
      x_[i] = std::polar(r, phase);
    }
    double s = 0.0;
    for (std::size_t row = 0; row < A_.rows(); ++row) {
      cplx acc{};
      for (std::size_t j = 0; j < n_; ++j) acc += A_(row, j) * x_[j];
      s += std::pow(std::abs(acc), p_);
    }
    return std::pow(s, 1.0 / p_);
  }

  bool is_angle(std::size_t d) const { return d + 1 < n_; }

private:
  const ComplexMatrix& A_;
  double p_;
  std::size_t n_;
  std::vector<cplx> x_;
};

double golden_max(Objective& f, std::vector<double>& params, std::size_t d, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  const double keep = params[d];
  auto at = [&](double v) {
    params[d] = v;
    return f(params);
  };
  double a = lo, b = hi, c = b - g * (b - a), e = a + g * (b - a);
  double fc = at(c), fe = at(e);
  for (int it = 0; it < 48; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = at(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = at(e);
    }
  }
  const double cand = 0.5 * (a + b);
  const double fcand = at(cand);
  params[d] = keep;
  const double fkeep = f(params);
  if (fcand > fkeep) {
    params[d] = cand;
    return fcand;
  }
  return fkeep;
}

}  // namespace

double sphere_oracle(const ComplexMatrix& A, double p, const SphereOracleOptions& opt) {
  const std::size_t n = A.cols();
  if (n == 1) {
    double s = 0.0;
    for (std::size_t r = 0; r < A.rows(); ++r) s += std::pow(std::abs(A(r, 0)), p);
    return std::pow(s, 1.0 / p);
  }
  Objective f(A, p);
  const std::size_t d = f.dims();
  auto point = [&](std::size_t i) {
    std::vector<double> params(d);
    for (std::size_t k = 0; k < d; ++k) {
      const double u = radical_inverse(i + 1, kPrimes[k]);
      params[k] = f.is_angle(k) ? u * std::numbers::pi / 2.0 : u * 2.0 * std::numbers::pi;
    }
    return params;
  };

  std::vector<double> values(opt.samples);
  for (std::size_t i = 0; i < opt.samples; ++i) values[i] = f(point(i));
  std::vector<std::size_t> order(opt.samples);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t best = std::min(opt.refine_best, opt.samples);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best), order.end(),
                    [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  double result = values[order.front()];
  for (std::size_t b = 0; b < best; ++b) {
    std::vector<double> params = point(order[b]);
    double h = 0.25;
    double value = values[order[b]];
    for (int round = 0; round < opt.refine_rounds; ++round) {
      for (std::size_t k = 0; k < d; ++k) {
        double lo = params[k] - h, hi = params[k] + h;
        if (f.is_angle(k)) {
          lo = std::max(lo, 0.0);
          hi = std::min(hi, std::numbers::pi / 2.0);
        }
        value = golden_max(f, params, k, lo, hi);
      }
      h *= 0.7;
    }
    result = std::max(result, value);
  }
  return result;
}

}  // namespace fpnorm::tst
