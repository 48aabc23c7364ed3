#include "report.hpp"
#include "suites.hpp"

#include "fpnorm/circulant.hpp"
#include "fpnorm/io.hpp"
#include "fpnorm/pnorm.hpp"
#include "fpnorm/quotient.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

using namespace fpnorm;
using cli::Json;

namespace {

int cmd_pnorm(const std::string& path, const std::string& p_text, std::uint64_t seed, double tol) {
  const ComplexMatrix A = parse_matrix(read_text_file(path));
  PowerIterationOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  const PExponent p = parse_exponent(p_text);
  const CertifiedInterval c = pnorm(A, p, opt);
  Json out;
  out["p"] = p.to_string();
  out["lower"] = c.lower;
  out["upper"] = c.upper;
  out["converged"] = c.converged;
  out["iterations"] = c.iterations;
  out["witness"] = cli::complex_json(c.witness);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_gamma(const std::vector<std::string>& rs, double tol) {
  const CirculantElement a{{1.0, cplx(0.0, 1.0)}};
  bool all = true;
  Json rows = Json::array();
  for (const std::string& text : rs) {
    const PExponent r = parse_exponent(text);
    if (r.is_infinite()) throw std::invalid_argument("gamma: r must be finite");
    const CertifiedInterval c = circulant_norm(a, r);
    const double closed = std::pow(2.0, std::abs(r.reciprocal() - 0.5));
    const bool ok = c.contains(closed, tol) && c.width() <= tol;
    all = all && ok;
    Json row;
    row["r"] = r.value();
    row["lower"] = c.lower;
    row["upper"] = c.upper;
    row["closed_form"] = closed;
    row["verdict"] = ok ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  Json out;
  out["tol"] = tol;
  out["rows"] = std::move(rows);
  out["verdict"] = all ? "pass" : "fail";
  std::cout << out.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_quotient(std::int64_t m, const std::string& coefficients, const std::string& p_text,
                 const std::vector<std::int64_t>& ks, std::optional<std::int64_t> window) {
  ComplexVector a = parse_complex_list(coefficients);
  if (a.size() > static_cast<std::size_t>(m))
    throw InputError("--coefficients: more than --modulus entries");
  a.resize(static_cast<std::size_t>(m));
  const GroupAlgebraElement f(FiniteGroup::cyclic(static_cast<std::size_t>(m)), a);
  const PExponent p = parse_exponent(p_text);
  Json records = Json::array();
  for (std::int64_t k : ks) {
    std::optional<TruncationWindow> w;
    if (window) w = TruncationWindow(*window);
    const QuotientGap g = quotient_gap(f, p, k, w);
    Json r;
    r["m"] = g.m;
    r["p"] = g.p.value();
    r["k"] = g.k;
    r["L"] = g.L;
    r["target_lower"] = g.target.lower;
    r["target_upper"] = g.target.upper;
    r["lift_lower"] = g.lift_lower;
    r["lift_upper_apriori"] = g.lift_upper_apriori;
    r["sandwich_holds"] = g.sandwich_holds();
    records.push_back(std::move(r));
  }
  Json out;
  out["coefficients"] = cli::complex_json(a);
  out["records"] = std::move(records);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const cli::SuiteConfig& config, const std::string& report_path,
               bool timings) {
  const cli::SuiteReport report = cli::run_suite(suite, config);
  const std::string text = report.to_json(timings).dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw InputError("--report: cannot write '" + report_path + "'");
    out << text;
  }
  std::cerr << suite << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checks.size() << " checks, "
            << report.failures() << " failed)\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified l^p operator norms for group algebras"};
  app.require_subcommand(1);

  auto* pn = app.add_subcommand("pnorm", "Certified ||A||_p for a matrix file");
  std::string matrix_path, p_text = "2";
  std::uint64_t seed = 0;
  double iteration_tol = 1e-12;
  pn->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  pn->add_option("--p", p_text, "Exponent: number, fraction like 4/3, or inf")->required();
  pn->add_option("--seed", seed, "Seed for random starts");
  pn->add_option("--tol", iteration_tol, "Relative stopping tolerance of the power iteration");

  auto* gm = app.add_subcommand("gamma", "||(1, i)||_{F^r(Z_2)} against 2^{|1/r - 1/2|}");
  std::vector<std::string> rs = {"1", "1.2", "4/3", "1.5", "1.8", "2", "3", "6"};
  double gamma_tol = 1e-6;
  gm->add_option("r", rs, "Exponents r in [1, inf)");
  gm->add_option("--tol", gamma_tol, "Containment and width tolerance");

  auto* qt = app.add_subcommand("quotient", "Folner lift sandwich for Z -> Z_m");
  std::int64_t modulus = 2;
  std::string coefficients, q_p = "2";
  std::vector<std::int64_t> ks = {4};
  std::optional<std::int64_t> window;
  qt->add_option("--modulus", modulus, "m >= 2")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  qt->add_option("--coefficients", coefficients, "Comma list of re+imi coefficients on Z_m")->required();
  qt->add_option("--p", q_p, "Exponent")->required();
  qt->add_option("--k", ks, "Folner indices")->delimiter(',')->check(CLI::PositiveNumber);
  qt->add_option("--window", window, "Window half-width L (default: radius + 4km)");

  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, report_path;
  cli::SuiteConfig config;
  bool timings = false;
  vf->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(cli::suite_names()));
  vf->add_option("--seed", config.seed, "Seed for generated inputs");
  vf->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  vf->add_option("--tol", config.closed_form_tol, "Closed-form tolerance");
  vf->add_option("--overlap-tol", config.overlap_tol, "Overlap tolerance for isometry checks");
  vf->add_flag("--timings", timings, "Include wall times (reports are then not reproducible)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pn) return cmd_pnorm(matrix_path, p_text, seed, iteration_tol);
    if (*gm) return cmd_gamma(rs, gamma_tol);
    if (*qt) return cmd_quotient(modulus, coefficients, q_p, ks, window);
    if (*vf) return cmd_verify(suite, config, report_path, timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
