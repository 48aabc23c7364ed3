#include "suites.hpp"

#include "fpnorm/circulant.hpp"
#include "fpnorm/folner.hpp"
#include "fpnorm/group_algebra.hpp"
#include "fpnorm/laurent.hpp"
#include "fpnorm/pnorm.hpp"
#include "fpnorm/quotient.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

namespace fpnorm::cli {

namespace {

using Body = std::function<bool(CheckRecord&)>;

void add_check(SuiteReport& report, std::string name, Provenance provenance, const Body& body) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.provenance = provenance;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rec.pass = body(rec);
  } catch (const std::exception& e) {
    rec.result["error"] = e.what();
    rec.pass = false;
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.checks.push_back(std::move(rec));
}

std::string fmt(const char* pattern, auto... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) { return seed * 0x9E3779B97F4A7C15ull + i; }

CirculantElement random_xi(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CirculantElement xi;
  for (std::size_t k = 0; k < n; ++k) xi.gelfand.emplace_back(unit(rng), unit(rng));
  return xi;
}

double gamma_closed_form(double r) { return std::pow(2.0, std::abs(1.0 / r - 0.5)); }

const cplx I{0.0, 1.0};

void gamma_suite(SuiteReport& report, const SuiteConfig& cfg) {
  const CirculantElement a{{1.0, I}};
  const double rs[] = {1.0, 1.2, 4.0 / 3.0, 1.5, 1.8, 2.0, 3.0, 6.0};
  for (double r : rs) {
    add_check(report, fmt("gamma/r=%.6f", r), Provenance::Published, [&](CheckRecord& rec) {
      const CertifiedInterval c = circulant_norm(a, PExponent(r));
      const double g = gamma_closed_form(r);
      rec.inputs = {{"gelfand", complex_json(a.gelfand)}, {"r", r}};
      rec.result = interval_json(c);
      rec.expected = {{"value", g}, {"tol", cfg.closed_form_tol}};
      return c.contains(g, cfg.closed_form_tol) && c.width() <= cfg.closed_form_tol;
    });
  }
  const std::pair<double, double> endpoints[] = {{1.0, std::sqrt(2.0)}, {2.0, 1.0}};
  for (auto [r, value] : endpoints) {
    add_check(report, fmt("gamma/exact/r=%g", r), Provenance::Published, [&](CheckRecord& rec) {
      const double v = pnorm_exact(circulant_matrix(a), PExponent(r));
      rec.inputs = {{"r", r}};
      rec.result = {{"value", v}};
      rec.expected = {{"value", value}, {"tol", 1e-9}};
      return std::abs(v - value) <= 1e-9;
    });
  }
  for (double r : {1.2, 1.5, 4.0 / 3.0}) {
    const PExponent p(r);
    add_check(report, fmt("gamma/conjugate/r=%.6f", r), Provenance::Oracle, [&](CheckRecord& rec) {
      const CertifiedInterval c = circulant_norm(a, p);
      const CertifiedInterval d = circulant_norm(a, p.conjugate());
      rec.inputs = {{"r", r}, {"conjugate", p.conjugate().value()}};
      rec.result = {{"r", interval_json(c)}, {"conjugate", interval_json(d)}};
      rec.expected = {{"value", gamma_closed_form(r)}, {"overlap_tol", cfg.overlap_tol}};
      return overlaps(c, d, cfg.overlap_tol) &&
             gamma_closed_form(r) == gamma_closed_form(p.conjugate().value());
    });
  }
}

void shift_suite(SuiteReport& report, const SuiteConfig& cfg) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const CirculantElement xi = random_xi(n, mix(cfg.seed, i));
    const CirculantElement shifted = cyclic_shift(xi);
    for (double pv : {1.3, 1.7, 2.5}) {
      add_check(report, fmt("shift/i=%03u/p=%.1f", static_cast<unsigned>(i), pv), Provenance::Oracle,
                [&](CheckRecord& rec) {
                  const CertifiedInterval a = circulant_norm(xi, PExponent(pv));
                  const CertifiedInterval b = circulant_norm(shifted, PExponent(pv));
                  rec.inputs = {{"n", n}, {"p", pv}, {"gelfand", complex_json(xi.gelfand)}};
                  rec.result = {{"xi", interval_json(a)}, {"shifted", interval_json(b)}};
                  rec.expected = {{"overlap_tol", cfg.overlap_tol}};
                  return overlaps(a, b, cfg.overlap_tol);
                });
    }
  }
}

void subgroup_suite(SuiteReport& report, const SuiteConfig& cfg) {
  struct Case {
    const char* name;
    GroupHomomorphism iota;
  };
  const Case corpus[] = {{"Z2<Z4", cyclic_inclusion(2, 2)}, {"Z2<Z6", cyclic_inclusion(2, 3)},
                         {"Z3<S3", rotations_in_s3()}};
  for (const Case& c : corpus) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const GroupAlgebraElement f = GroupAlgebraElement::random(c.iota.source(), mix(cfg.seed, 100 + i));
      const GroupAlgebraElement g = subgroup_embed(f, c.iota);
      add_check(report, fmt("subgroup/%s/i=%02u/blocks", c.name, static_cast<unsigned>(i)), Provenance::Structural,
                [&](CheckRecord& rec) {
                  const bool ok = coset_block_identity(f, c.iota);
                  rec.inputs = {{"coefficients", complex_json(f.coefficients())}};
                  rec.result = {{"block_identity", ok}};
                  rec.expected = {{"block_identity", true}};
                  return ok;
                });
      for (double pv : {1.4, 2.0, 2.6}) {
        add_check(report, fmt("subgroup/%s/i=%02u/p=%.1f", c.name, static_cast<unsigned>(i), pv),
                  Provenance::Oracle, [&](CheckRecord& rec) {
                    const CertifiedInterval h = fp_lambda_norm(f, PExponent(pv));
                    const CertifiedInterval G = fp_lambda_norm(g, PExponent(pv));
                    rec.inputs = {{"p", pv}, {"coefficients", complex_json(f.coefficients())}};
                    rec.result = {{"subgroup", interval_json(h)}, {"group", interval_json(G)}};
                    rec.expected = {{"overlap_tol", cfg.overlap_tol}};
                    return overlaps(h, G, cfg.overlap_tol);
                  });
      }
    }
  }
}

void duality_suite(SuiteReport& report, const SuiteConfig& cfg) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 5;
    const GroupAlgebraElement f = GroupAlgebraElement::random(FiniteGroup::cyclic(n), mix(cfg.seed, 200 + i));
    const GroupAlgebraElement fc = involution(f);
    add_check(report, fmt("duality/i=%02u/transpose", static_cast<unsigned>(i)), Provenance::Structural,
              [&](CheckRecord& rec) {
                const bool ok = regular_rep(fc) == regular_rep(f).transpose();
                rec.inputs = {{"n", n}};
                rec.result = {{"transpose_identity", ok}};
                rec.expected = {{"transpose_identity", true}};
                return ok;
              });
    for (double pv : {1.4, 1.7}) {
      const PExponent p(pv);
      add_check(report, fmt("duality/i=%02u/p=%.1f", static_cast<unsigned>(i), pv), Provenance::Oracle,
                [&](CheckRecord& rec) {
                  const CertifiedInterval a = fp_lambda_norm(f, p);
                  const CertifiedInterval b = fp_lambda_norm(fc, p.conjugate());
                  rec.inputs = {{"n", n}, {"p", pv}, {"conjugate", p.conjugate().value()},
                                {"coefficients", complex_json(f.coefficients())}};
                  rec.result = {{"f", interval_json(a)}, {"involution", interval_json(b)}};
                  rec.expected = {{"overlap_tol", 1e-6}};
                  return overlaps(a, b, 1e-6);
                });
    }
  }
}

void monotone_suite(SuiteReport& report, const SuiteConfig& cfg) {
  const double ps[] = {1.0, 1.3, 1.6, 2.0};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 5;
    const CirculantElement xi = random_xi(n, mix(cfg.seed, 300 + i));
    std::vector<CertifiedInterval> certs;
    for (double pv : ps) certs.push_back(circulant_norm(xi, PExponent(pv)));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        add_check(report, fmt("monotone/i=%02u/p=%.1f/q=%.1f", static_cast<unsigned>(i), ps[a], ps[b]),
                  Provenance::Published, [&](CheckRecord& rec) {
                    rec.inputs = {{"n", n}, {"p", ps[a]}, {"q", ps[b]}, {"gelfand", complex_json(xi.gelfand)}};
                    rec.result = {{"p", interval_json(certs[a])}, {"q", interval_json(certs[b])}};
                    rec.expected = {{"relation", "lower(q) <= upper(p)"}, {"tol", 1e-8}};
                    return certs[b].lower <= certs[a].upper + 1e-8;
                  });
      }
    add_check(report, fmt("monotone/i=%02u/sup", static_cast<unsigned>(i)), Provenance::Published,
              [&](CheckRecord& rec) {
                const double sup = xi.sup_norm();
                rec.inputs = {{"n", n}, {"gelfand", complex_json(xi.gelfand)}};
                rec.result = interval_json(certs[3]);
                rec.expected = {{"value", sup}, {"tol", 1e-9}};
                return std::abs(certs[3].lower - sup) <= 1e-9 * (1.0 + sup);
              });
  }
}

SectionOptions average_section_options() {
  SectionOptions opt;
  opt.power.random_starts = 0;
  return opt;
}

void folner_suite(SuiteReport& report, const SuiteConfig& cfg) {
  const SectionOptions opt = average_section_options();
  const std::vector<TruncationWindow> windows = {TruncationWindow(64), TruncationWindow(256), TruncationWindow(1024)};
  for (std::int64_t m : {2, 3})
    for (std::int64_t k : {1, 2, 4, 8, 16})
      for (double pv : {1.5, 3.0}) {
        const LaurentElement T = folner_average(k, m);
        std::vector<TruncationWindow> usable;
        for (TruncationWindow w : windows)
          if (w.half_width() >= T.radius()) usable.push_back(w);
        add_check(report, fmt("folner/average/m=%d/k=%02d/p=%.1f", static_cast<int>(m), static_cast<int>(k), pv),
                  Provenance::Published, [&](CheckRecord& rec) {
                    const auto sweep = fpz_norm_sweep(T, PExponent(pv), usable, opt);
                    bool ok = true;
                    Json rows = Json::array();
                    for (std::size_t i = 0; i < sweep.size(); ++i) {
                      ok = ok && sweep[i].upper == 1.0 && sweep[i].lower <= 1.0 + 1e-9;
                      if (i > 0) ok = ok && sweep[i].lower >= sweep[i - 1].lower;
                      Json row = interval_json(sweep[i]);
                      row["L"] = usable[i].half_width();
                      rows.push_back(std::move(row));
                    }
                    rec.inputs = {{"m", m}, {"k", k}, {"p", pv}};
                    rec.result = {{"sweep", rows}};
                    rec.expected = {{"upper", 1.0}, {"lower_at_most", 1.0 + 1e-9}, {"lower_nondecreasing", true}};
                    return ok;
                  });
      }
  for (double pv : {1.5, 3.0}) {
    add_check(report, fmt("folner/average/k=8/L=512/p=%.1f", pv), Provenance::Published, [&](CheckRecord& rec) {
      const CertifiedInterval c = fpz_norm(folner_average(8, 2), PExponent(pv), TruncationWindow(512), opt);
      rec.inputs = {{"m", 2}, {"k", 8}, {"L", 512}, {"p", pv}};
      rec.result = interval_json(c);
      rec.expected = {{"lower_at_least", 0.95}, {"upper", 1.0}};
      return c.lower >= 0.95 && c.upper == 1.0;
    });
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 5;
    const GroupAlgebraElement f =
        GroupAlgebraElement::random_nonnegative(FiniteGroup::cyclic(n), mix(cfg.seed, 400 + i));
    add_check(report, fmt("folner/positive/i=%02u", static_cast<unsigned>(i)), Provenance::Published,
              [&](CheckRecord& rec) {
                const CertifiedInterval two = fp_lambda_norm(f, PExponent(2.0));
                bool ok = true;
                Json res;
                res["p=2"] = interval_json(two);
                for (double pv : {1.3, 1.8, 2.7}) {
                  const CertifiedInterval c = fp_lambda_norm(f, PExponent(pv));
                  res[fmt("p=%.1f", pv)] = interval_json(c);
                  ok = ok && overlaps(c, two, cfg.overlap_tol) && positive_norm_check(f, PExponent(pv), cfg.overlap_tol);
                }
                rec.inputs = {{"n", n}, {"coefficients", complex_json(f.coefficients())}};
                rec.result = res;
                rec.expected = {{"overlap_with_p2", cfg.overlap_tol}};
                return ok;
              });
  }
}

Json rational_json(Rational r) { return Json::array({r.numerator(), r.denominator()}); }

void theta_suite(SuiteReport& report, const SuiteConfig&) {
  for (std::int64_t m = 2; m <= 6; ++m) {
    add_check(report, fmt("theta/cocycle/m=%d", static_cast<int>(m)), Provenance::Structural, [&](CheckRecord& rec) {
      const QuotientSetupZ setup(m);
      const std::vector<std::int64_t> image = setup.cocycle_image();
      rec.inputs = {{"m", m}};
      rec.result = {{"identity", setup.cocycle_identity_holds()}, {"image", image}};
      rec.expected = {{"identity", true}, {"image", {0, m}}};
      return setup.cocycle_identity_holds() && image == std::vector<std::int64_t>{0, m};
    });
  }
  for (std::int64_t m : {2, 3})
    for (std::int64_t k = 1; k <= 32; ++k)
      for (std::int64_t s = 0; s < m; ++s) {
        add_check(report, fmt("theta/l1/m=%d/k=%02d/s=%d", static_cast<int>(m), static_cast<int>(k), static_cast<int>(s)),
                  Provenance::Oracle, [&](CheckRecord& rec) {
                    const ThetaOperator theta(k, m, s);
                    const Rational direct = theta.l1_norm_on(TruncationWindow(k * m + 2 * m));
                    const Rational formula = theta_l1(k, m, s);
                    const Rational expected = s == 0 ? Rational(0) : Rational(2, k);
                    rec.inputs = {{"m", m}, {"k", k}, {"s", s}};
                    rec.result = {{"direct", rational_json(direct)}, {"formula", rational_json(formula)}};
                    rec.expected = {{"value", rational_json(expected)}};
                    return direct == formula && formula == expected && theta_l1(k, m) == Rational(2, k);
                  });
      }
  for (std::int64_t k : {1, 4, 16})
    for (double pv : {1.5, 2.0}) {
      add_check(report, fmt("theta/p-bound/k=%02d/p=%.1f", static_cast<int>(k), pv), Provenance::Oracle,
                [&](CheckRecord& rec) {
                  const std::int64_t m = 2;
                  const double bound = theta_p_bound(k, m, PExponent(pv));
                  double worst = 0.0;
                  for (std::int64_t s = 0; s < m; ++s) {
                    const SparseMatrix section = ThetaOperator(k, m, s).section(TruncationWindow(4 * k * m));
                    PowerIterationOptions opt;
                    opt.basis_starts = false;
                    opt.random_starts = 4;
                    opt.seed = 7;
                    if (section.max_column_abs_sum().value > 0.0)
                      worst = std::max(worst, operator_pnorm_lower(section, PExponent(pv), opt).lower);
                  }
                  rec.inputs = {{"m", m}, {"k", k}, {"p", pv}, {"L", 4 * k * m}};
                  rec.result = {{"section_lower", worst}};
                  rec.expected = {{"bound", bound}, {"tol", 1e-8}};
                  return worst <= bound + 1e-8;
                });
    }
}

GroupAlgebraElement z2_element(cplx a0, cplx a1) { return GroupAlgebraElement(FiniteGroup::cyclic(2), {a0, a1}); }

Json gap_json(const QuotientGap& g) {
  Json j;
  j["m"] = g.m;
  j["p"] = g.p.value();
  j["k"] = g.k;
  j["L"] = g.L;
  j["target_lower"] = g.target.lower;
  j["target_upper"] = g.target.upper;
  j["lift_lower"] = g.lift_lower;
  j["lift_upper_apriori"] = g.lift_upper_apriori;
  return j;
}

void quotient_suite(SuiteReport& report, const SuiteConfig& cfg) {
  const GroupAlgebraElement f = z2_element(1.0, I);
  const std::int64_t ks[] = {4, 16, 64};
  for (double pv : {1.5, 3.0}) {
    add_check(report, fmt("quotient/sandwich/p=%.1f", pv), Provenance::Oracle, [&](CheckRecord& rec) {
      std::vector<TruncationWindow> windows;
      for (std::int64_t k : ks) windows.emplace_back(1024 * k);
      const auto sweep = quotient_sweep(f, PExponent(pv), ks, windows);
      bool ok = true;
      Json rows = Json::array();
      double previous = std::numeric_limits<double>::infinity();
      for (const QuotientGap& g : sweep) {
        const double excess = g.lift_upper_apriori - g.target.upper;
        const double allowed = 2.0 * f.l1_norm() * std::pow(2.0 / static_cast<double>(g.k), 1.0 / pv);
        ok = ok && g.sandwich_holds(1e-6, 0.0) && excess <= allowed && excess <= previous;
        previous = excess;
        rows.push_back(gap_json(g));
      }
      rec.inputs = {{"coefficients", complex_json(f.coefficients())}, {"p", pv}, {"k", ks}};
      rec.result = {{"sweep", rows}};
      rec.expected = {{"lower_tol", 1e-6}, {"excess_at_most", "2 sum|a_s| (2/k)^{1/p}"}, {"excess_nonincreasing", true}};
      return ok;
    });
  }
  for (double pv : {1.5, 3.0}) {
    add_check(report, fmt("quotient/unit/p=%.1f", pv), Provenance::Structural, [&](CheckRecord& rec) {
      const QuotientGap g = quotient_gap(z2_element(1.0, 0.0), PExponent(pv), 4, TruncationWindow(8192));
      rec.inputs = {{"coefficients", complex_json(std::vector<cplx>{1.0, 0.0})}, {"p", pv}};
      rec.result = gap_json(g);
      rec.expected = {{"value", 1.0}, {"tol", 1e-6}};
      return std::abs(g.target.lower - 1.0) <= 1e-6 && std::abs(g.target.upper - 1.0) <= 1e-6 &&
             std::abs(g.lift_lower - 1.0) <= 1e-6 && std::abs(g.lift_upper_apriori - 1.0) <= 1e-6;
    });
  }
  const QuotientOptions qopt;
  const CertifiedInterval target = fp_lambda_norm(f, PExponent(1.5));
  for (std::uint64_t i = 0; i < 20; ++i) {
    add_check(report, fmt("quotient/contractive/i=%02u", static_cast<unsigned>(i)), Provenance::Published,
              [&](CheckRecord& rec) {
                const LaurentElement g = random_lift(f, mix(cfg.seed, 500 + i));
                SectionOptions opt = qopt.section;
                opt.periodic_patterns.push_back(target.witness);
                const CertifiedInterval c = fpz_norm(g, PExponent(1.5), TruncationWindow(1024), opt);
                const GroupAlgebraElement pushed = push_to_quotient(g, 2);
                double push_error = 0.0;
                for (std::size_t s = 0; s < 2; ++s) push_error = std::max(push_error, std::abs(pushed[s] - f[s]));
                rec.inputs = {{"p", 1.5}, {"L", 1024}, {"lift_support", g.coefficients().size()}};
                rec.result = {{"lift", interval_json(c)}, {"push_error", push_error}};
                rec.expected = {{"lift_lower_at_least", target.lower - 1e-6}};
                return c.lower >= target.lower - 1e-6 && push_error <= 1e-12;
              });
  }
  add_check(report, "quotient/positive/p=1.3", Provenance::Oracle, [&](CheckRecord& rec) {
    const GroupAlgebraElement h(FiniteGroup::cyclic(3), {0.5, 0.25, 0.25});
    const QuotientGap g = quotient_gap(h, PExponent(1.3), 4, TruncationWindow(4096));
    const CertifiedInterval two = fp_lambda_norm(h, PExponent(2.0));
    rec.inputs = {{"coefficients", complex_json(h.coefficients())}, {"p", 1.3}};
    rec.result = gap_json(g);
    rec.expected = {{"target_equals_p2", interval_json(two)}, {"lower_tol", 1e-6}};
    return overlaps(g.target, two, cfg.overlap_tol) && g.sandwich_holds(1e-6, 1e-8);
  });
}

using SuiteFn = void (*)(SuiteReport&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"gamma", gamma_suite},       {"shift", shift_suite},   {"subgroup", subgroup_suite},
      {"duality", duality_suite},   {"monotone", monotone_suite}, {"folner", folner_suite},
      {"theta", theta_suite},       {"quotient", quotient_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.seed = config.seed;
  bool found = false;
  for (const auto& [suite, fn] : registry())
    if (name == "all" || name == suite) {
      fn(report, config);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite '" + name + "'");
  return report;
}

}  // namespace fpnorm::cli
