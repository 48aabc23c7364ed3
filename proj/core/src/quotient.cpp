#include "fpnorm/quotient.hpp"

#include <stdexcept>

namespace fpnorm {

bool QuotientGap::sandwich_holds(double lower_tol, double upper_tol) const {
  return target.lower - lower_tol <= lift_lower && lift_lower <= lift_upper_apriori + upper_tol;
}

QuotientOptions::QuotientOptions() {
  // The periodised target witness is already close to optimal on wide
  // windows; extra starts mostly cost time.
  section.power.random_starts = 0;
  section.power.max_iterations = 100;
  section.tapered_starts = false;
}

double lift_correction_bound(const GroupAlgebraElement& f, std::int64_t k, PExponent p) {
  const auto m = static_cast<std::int64_t>(f.group().order());
  double total = 0.0;
  for (std::int64_t s = 0; s < m; ++s) {
    const double a = std::abs(f[static_cast<std::size_t>(s)]);
    if (a > 0.0) total += a * theta_p_bound(k, m, s, p);
  }
  return total;
}

TruncationWindow default_window(const LaurentElement& lift, std::int64_t k, std::int64_t m) {
  return TruncationWindow(lift.radius() + 4 * k * m);
}

QuotientGap quotient_gap(const GroupAlgebraElement& f, PExponent p, std::int64_t k,
                         std::optional<TruncationWindow> window, const QuotientOptions& opt) {
  if (!f.group().is_standard_cyclic())
    throw std::invalid_argument("quotient_gap expects an element of the standard cyclic group Z_m");
  QuotientGap gap;
  gap.m = static_cast<std::int64_t>(f.group().order());
  gap.k = k;
  gap.p = p;
  const LaurentElement lift = folner_lift(f, k);
  const TruncationWindow w = window.value_or(default_window(lift, k, gap.m));
  gap.L = w.half_width();

  gap.target = fp_lambda_norm(f, p, opt.target);
  SectionOptions section = opt.section;
  section.periodic_patterns.push_back(gap.target.witness);
  gap.lift = fpz_norm(lift, p, w, section);
  gap.lift_lower = gap.lift.lower;
  gap.lift_upper_apriori = gap.target.upper + lift_correction_bound(f, k, p);
  return gap;
}

std::vector<QuotientGap> quotient_sweep(const GroupAlgebraElement& f, PExponent p, std::span<const std::int64_t> ks,
                                        std::span<const TruncationWindow> windows, const QuotientOptions& opt) {
  if (!windows.empty() && windows.size() != ks.size())
    throw std::invalid_argument("quotient sweep needs one window per k");
  std::vector<QuotientGap> out;
  out.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    out.push_back(quotient_gap(f, p, ks[i],
                               windows.empty() ? std::nullopt : std::optional<TruncationWindow>(windows[i]), opt));
  return out;
}

}  // namespace fpnorm
