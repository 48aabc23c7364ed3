#include "fpnorm/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fpnorm {

LaurentElement::LaurentElement(std::map<std::int64_t, cplx> coefficients) {
  for (const auto& [n, c] : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("Laurent coefficient at offset " + std::to_string(n) + " is not finite");
    if (c != cplx{}) coeffs_.emplace(n, c);
  }
}

LaurentElement LaurentElement::delta(std::int64_t n, cplx c) { return LaurentElement({{n, c}}); }

cplx LaurentElement::operator[](std::int64_t n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{} : it->second;
}

std::int64_t LaurentElement::min_offset() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
std::int64_t LaurentElement::max_offset() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
std::int64_t LaurentElement::radius() const { return std::max(std::abs(min_offset()), std::abs(max_offset())); }
std::int64_t LaurentElement::diameter() const { return max_offset() - min_offset(); }

double LaurentElement::l1_norm() const {
  // Extended accumulation so that k copies of 1/k sum to exactly 1.
  long double s = 0.0L;
  for (const auto& [n, c] : coeffs_) s += std::abs(c);
  return static_cast<double>(s);
}

bool LaurentElement::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.imag() == 0.0 && kv.second.real() >= 0.0; });
}

cplx LaurentElement::symbol(double theta) const {
  cplx s{};
  for (const auto& [n, c] : coeffs_) s += c * std::polar(1.0, static_cast<double>(n) * theta);
  return s;
}

LaurentElement convolve(const LaurentElement& a, const LaurentElement& b) {
  std::map<std::int64_t, cplx> out;
  for (const auto& [n, x] : a.coeffs_)
    for (const auto& [m, y] : b.coeffs_) out[n + m] += x * y;
  return LaurentElement(std::move(out));
}

TruncationWindow::TruncationWindow(std::int64_t half_width) : half_width_(half_width) {
  if (half_width < 1) throw std::invalid_argument("truncation window half-width must be >= 1");
}

namespace {

void require_window_covers(const LaurentElement& f, TruncationWindow window) {
  if (window.half_width() < f.radius())
    throw std::invalid_argument("window half-width " + std::to_string(window.half_width()) +
                                " is smaller than the support radius " + std::to_string(f.radius()));
}

}  // namespace

ComplexMatrix truncated_rep(const LaurentElement& f, TruncationWindow window) {
  require_window_covers(f, window);
  const std::int64_t L = window.half_width();
  ComplexMatrix M(window.size(), window.size());
  for (std::int64_t t = -L; t <= L; ++t)
    for (const auto& [d, c] : f.coefficients()) {
      const std::int64_t s = t - d;
      if (s >= -L && s <= L) M(window.index(t), window.index(s)) = c;
    }
  return M;
}

ToeplitzSection::ToeplitzSection(const LaurentElement& f, TruncationWindow window) : n_(window.size()) {
  require_window_covers(f, window);
  for (const auto& [d, c] : f.coefficients()) {
    offsets_.push_back(d);
    taps_.push_back(c);
  }
}

void ToeplitzSection::apply(std::span<const cplx> x, std::span<cplx> y) const {
  const auto n = static_cast<std::int64_t>(n_);
  const double* xs = reinterpret_cast<const double*>(x.data());
  double* ys = reinterpret_cast<double*>(y.data());
  std::fill(y.begin(), y.end(), cplx{});
  for (std::size_t k = 0; k < taps_.size(); ++k) {
    const std::int64_t d = offsets_[k];
    const double cr = taps_[k].real(), ci = taps_[k].imag();
    const std::int64_t lo = std::max<std::int64_t>(0, d), hi = std::min(n, n + d);
    double* yo = ys + 2 * lo;
    const double* xo = xs + 2 * (lo - d);
    for (std::int64_t t = 0; t < hi - lo; ++t) {
      const double xr = xo[2 * t], xi = xo[2 * t + 1];
      yo[2 * t] += cr * xr - ci * xi;
      yo[2 * t + 1] += cr * xi + ci * xr;
    }
  }
}

void ToeplitzSection::apply_adjoint(std::span<const cplx> y, std::span<cplx> z) const {
  const auto n = static_cast<std::int64_t>(n_);
  const double* ys = reinterpret_cast<const double*>(y.data());
  double* zs = reinterpret_cast<double*>(z.data());
  std::fill(z.begin(), z.end(), cplx{});
  // z_s = sum_d conj(c_d) y_{s+d}
  for (std::size_t k = 0; k < taps_.size(); ++k) {
    const std::int64_t d = offsets_[k];
    const double cr = taps_[k].real(), ci = -taps_[k].imag();
    const std::int64_t lo = std::max<std::int64_t>(0, -d), hi = std::min(n, n - d);
    double* zo = zs + 2 * lo;
    const double* yo = ys + 2 * (lo + d);
    for (std::int64_t s = 0; s < hi - lo; ++s) {
      const double yr = yo[2 * s], yi = yo[2 * s + 1];
      zo[2 * s] += cr * yr - ci * yi;
      zo[2 * s + 1] += cr * yi + ci * yr;
    }
  }
}

IndexedSum ToeplitzSection::max_column_abs_sum() const {
  // The window covers the support, so the centre column sees every tap.
  double s = 0.0;
  for (const cplx& c : taps_) s += std::abs(c);
  return {n_ / 2, s};
}

IndexedSum ToeplitzSection::max_row_abs_sum() const { return max_column_abs_sum(); }

SymbolSup symbol_sup(const LaurentElement& f, std::size_t grid) {
  if (f.empty()) return {};
  if (f.is_nonnegative()) return {f.l1_norm(), 0.0};

  const std::size_t points =
      std::max<std::size_t>(grid, 16 * static_cast<std::size_t>(f.diameter() + 1));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
  std::vector<double> values(points);
  for (std::size_t j = 0; j < points; ++j) values[j] = std::abs(f.symbol(step * static_cast<double>(j)));

  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < points; ++j) {
    const double prev = values[(j + points - 1) % points], next = values[(j + 1) % points];
    if (values[j] >= prev && values[j] >= next) peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (peaks.size() > 8) peaks.resize(8);

  SymbolSup best{values[peaks.front()], step * static_cast<double>(peaks.front())};
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t j : peaks) {
    double a = step * (static_cast<double>(j) - 1.0), b = step * (static_cast<double>(j) + 1.0);
    double c = b - golden * (b - a), d = a + golden * (b - a);
    double fc = std::abs(f.symbol(c)), fd = std::abs(f.symbol(d));
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - golden * (b - a);
        fc = std::abs(f.symbol(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + golden * (b - a);
        fd = std::abs(f.symbol(d));
      }
    }
    const double mid = 0.5 * (a + b);
    const double v = std::abs(f.symbol(mid));
    if (v > best.value) best = {v, mid};
  }
  return best;
}

SectionOptions::SectionOptions() {
  power.random_starts = 2;
  power.basis_starts = false;
  power.ones_start = false;
  power.max_iterations = 2000;
}

ComplexVector tapered_periodic_start(std::span<const cplx> pattern, TruncationWindow window, PExponent p) {
  if (pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
  const std::int64_t L = window.half_width();
  const auto m = static_cast<std::int64_t>(pattern.size());
  const double exponent = 2.0 * p.reciprocal();
  ComplexVector x(window.size());
  for (std::int64_t n = -L; n <= L; ++n) {
    const double env = std::pow(std::sin(std::numbers::pi * static_cast<double>(n + L + 1) /
                                         static_cast<double>(2 * L + 2)),
                                exponent);
    x[window.index(n)] = pattern[static_cast<std::size_t>(((n % m) + m) % m)] * env;
  }
  return x;
}

namespace {

PowerIterationOptions section_power_options(PExponent p, TruncationWindow window,
                                            const SectionOptions& opt, const SymbolSup& peak) {
  PowerIterationOptions power = opt.power;
  for (const ComplexVector& pattern : opt.periodic_patterns)
    power.extra_starts.push_back(tapered_periodic_start(pattern, window, p));
  if (opt.tapered_starts) {
    const cplx one[] = {1.0};
    power.extra_starts.push_back(tapered_periodic_start(one, window, p));
    if (peak.theta != 0.0) {
      // x_n = e^{-i theta* n} picks up symbol(theta*) in the interior.
      ComplexVector modulated = tapered_periodic_start(one, window, p);
      const std::int64_t L = window.half_width();
      for (std::int64_t n = -L; n <= L; ++n)
        modulated[window.index(n)] *= std::polar(1.0, -peak.theta * static_cast<double>(n));
      power.extra_starts.push_back(std::move(modulated));
    }
    ComplexVector centre(window.size());
    centre[window.index(0)] = 1.0;
    power.extra_starts.push_back(std::move(centre));
  }
  return power;
}

}  // namespace

CertifiedInterval fpz_norm(const LaurentElement& f, PExponent p, TruncationWindow window, const SectionOptions& opt) {
  require_window_covers(f, window);
  CertifiedInterval out;
  out.p = p;
  if (f.empty()) {
    out.lower = out.upper = 0.0;
    out.witness.assign(window.size(), cplx{});
    out.witness[window.index(0)] = 1.0;
    return out;
  }
  const ToeplitzSection section(f, window);
  const double l1 = f.l1_norm();
  if (p.is_one() || p.is_infinite()) {
    out = operator_pnorm_exact(section, p);
    out.upper = l1;
    detail::reconcile(out);
    return out;
  }
  const SymbolSup peak = symbol_sup(f, opt.symbol_grid);
  out = operator_pnorm_lower(section, p, section_power_options(p, window, opt, peak));
  out.upper = interpolation_upper(p, l1, peak.value, l1);
  detail::reconcile(out);
  return out;
}

std::vector<CertifiedInterval> fpz_norm_sweep(const LaurentElement& f, PExponent p,
                                              std::span<const TruncationWindow> windows, const SectionOptions& opt) {
  std::vector<CertifiedInterval> out;
  out.reserve(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    SectionOptions local = opt;
    if (i > 0) {
      const TruncationWindow prev = windows[i - 1], cur = windows[i];
      if (cur.half_width() < prev.half_width())
        throw std::invalid_argument("sweep windows must be nondecreasing");
      // Zero-pad the previous witness; the larger section dominates it.
      ComplexVector padded(cur.size());
      const CertifiedInterval& last = out.back();
      for (std::int64_t n = -prev.half_width(); n <= prev.half_width(); ++n)
        padded[cur.index(n)] = last.witness[prev.index(n)];
      local.power.extra_starts.insert(local.power.extra_starts.begin(), padded);
      CertifiedInterval c = fpz_norm(f, p, windows[i], local);
      // The previous bound still holds on the larger window; keep it if the
      // new one lost ground to the wider rounding margin.
      if (c.lower < last.lower) {
        c.lower = last.lower;
        c.witness = std::move(padded);
      }
      out.push_back(std::move(c));
      continue;
    }
    out.push_back(fpz_norm(f, p, windows[i], local));
  }
  return out;
}

}  // namespace fpnorm
