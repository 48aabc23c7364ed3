#pragma once

// The quotient Z -> Z_m seen through finite sections: the target norm on
// Z_m, the section lower bound for a Folner lift, and the a priori bound
// ||f~_k|| <= ||f|| + ||f~_k - f_k||.

#include "fpnorm/certified_interval.hpp"
#include "fpnorm/exponent.hpp"
#include "fpnorm/folner.hpp"
#include "fpnorm/group_algebra.hpp"
#include "fpnorm/laurent.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fpnorm {

struct QuotientGap {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t L = 0;
  PExponent p{2.0};
  CertifiedInterval target;
  CertifiedInterval lift;
  double lift_lower = 0.0;
  double lift_upper_apriori = 0.0;

  /// target.lower - lower_tol <= lift_lower <= lift_upper_apriori + upper_tol.
  bool sandwich_holds(double lower_tol = 1e-6, double upper_tol = 1e-8) const;
};

struct QuotientOptions {
  QuotientOptions();

  PowerIterationOptions target;
  /// Options for the lift's section; the target witness is always added as
  /// a periodic start pattern.
  SectionOptions section;
};

/// sum_s |f(s)| * theta_p_bound(k, m, s, p): bound on ||f~_k - f_k||.
double lift_correction_bound(const GroupAlgebraElement& f, std::int64_t k, PExponent p);

/// Support radius of the lift plus a 4 k m margin.
TruncationWindow default_window(const LaurentElement& lift, std::int64_t k, std::int64_t m);

/// target = fp_lambda_norm(f, p) on Z_m; lift = fpz_norm(folner_lift(f, k), p, L);
/// lift_upper_apriori = target.upper + lift_correction_bound(f, k, p).
QuotientGap quotient_gap(const GroupAlgebraElement& f, PExponent p, std::int64_t k,
                         std::optional<TruncationWindow> window = std::nullopt, const QuotientOptions& opt = {});

/// quotient_gap over ks; windows (if given) pair with ks one to one.
std::vector<QuotientGap> quotient_sweep(const GroupAlgebraElement& f, PExponent p, std::span<const std::int64_t> ks,
                                        std::span<const TruncationWindow> windows = {},
                                        const QuotientOptions& opt = {});

}  // namespace fpnorm
