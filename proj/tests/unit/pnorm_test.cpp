#include "fpnorm/circulant.hpp"
#include "fpnorm/pnorm.hpp"
#include "sphere_oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>

using namespace fpnorm;
using tst::a_matrix;

TEST(VectorPnorm, Examples) {
  const cplx i{0.0, 1.0};
  const cplx x[] = {1.0, i};
  EXPECT_NEAR(vector_pnorm(x, PExponent(2.0)), std::sqrt(2.0), 1e-15);
  const cplx e[] = {1.0, 0.0};
  for (double p : {1.0, 1.3, 2.0, 7.0}) EXPECT_DOUBLE_EQ(vector_pnorm(e, PExponent(p)), 1.0);
  EXPECT_DOUBLE_EQ(vector_pnorm(e, PExponent::infinity()), 1.0);
  const cplx y[] = {1.0 + i, 1.0 - i};
  EXPECT_NEAR(vector_pnorm(y, PExponent(4.0 / 3.0)), std::pow(2.0, 1.25), 1e-14);
}

TEST(VectorPnorm, InfinityIsMaxModulusAndScalingIsSafe) {
  const cplx x[] = {3.0, cplx(0, -4.0), 1.0};
  EXPECT_DOUBLE_EQ(vector_pnorm(x, PExponent::infinity()), 4.0);
  const cplx tiny[] = {1e-200, 1e-200};
  EXPECT_NEAR(vector_pnorm(tiny, PExponent(3.0)) / 1e-200, std::pow(2.0, 1.0 / 3.0), 1e-14);
}

TEST(DualityMap, ZeroKeepsZeroPhase) {
  const cplx v[] = {0.0, cplx(0.0, 2.0)};
  const ComplexVector w = duality_map(v, 3.0);
  EXPECT_EQ(w[0], cplx(0.0));
  EXPECT_NEAR(std::abs(w[1] - cplx(0.0, 4.0)), 0.0, 1e-14);
}

TEST(PnormExact, PaperMatrixEndpoints) {
  EXPECT_NEAR(pnorm_exact(a_matrix(), PExponent(1.0)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(pnorm_exact(a_matrix(), PExponent(2.0)), 1.0, 1e-12);
  EXPECT_NEAR(pnorm_exact(a_matrix(), PExponent::infinity()), std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(pnorm_exact(ComplexMatrix::identity(5), PExponent(1.0)), 1.0);
}

TEST(PnormExact, RejectsInteriorExponent) {
  EXPECT_THROW(pnorm_exact(a_matrix(), PExponent(1.5)), std::invalid_argument);
}

TEST(PnormExact, TwoNormIsLargestSingularValue) {
  // [[3, 0], [4, 5]] has singular values 3 sqrt(5) and sqrt(5).
  const ComplexMatrix A{{3.0, 0.0}, {4.0, 5.0}};
  EXPECT_NEAR(pnorm_exact(A, PExponent(2.0)), 3.0 * std::sqrt(5.0), 1e-10);
}

TEST(PnormLower, PaperMatrixAtFourThirds) {
  const CertifiedInterval c = pnorm_lower(a_matrix(), PExponent(4.0 / 3.0));
  EXPECT_NEAR(c.lower, std::pow(2.0, 0.25), 1e-8);
  EXPECT_TRUE(std::isinf(c.upper));
  EXPECT_TRUE(c.converged);
  EXPECT_TRUE(witness_attains_lower(a_matrix(), c));
}

TEST(PnormLower, DiagonalHasBasisWitness) {
  const cplx d[] = {3.0, 1.0};
  const ComplexMatrix D = ComplexMatrix::diagonal(d);
  for (double p : {1.2, 2.0, 3.5}) {
    const CertifiedInterval c = pnorm_lower(D, PExponent(p));
    EXPECT_NEAR(c.lower, 3.0, 1e-12);
    EXPECT_NEAR(std::abs(c.witness[0]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(c.witness[1]), 0.0, 1e-12);
  }
}

TEST(PnormLower, Random3x3MatchesSphereOracle) {
  const ComplexMatrix A = tst::random_matrix(3, 3, 77);
  const double oracle = tst::sphere_oracle(A, 1.3);
  EXPECT_NEAR(pnorm_lower(A, PExponent(1.3)).lower, oracle, 1e-4);
}

TEST(PnormLower, RejectsZeroMatrixAndEndpoints) {
  EXPECT_THROW(pnorm_lower(ComplexMatrix(2, 2), PExponent(1.5)), std::invalid_argument);
  EXPECT_THROW(pnorm_lower(a_matrix(), PExponent(1.0)), std::invalid_argument);
  EXPECT_THROW(pnorm_lower(a_matrix(), PExponent::infinity()), std::invalid_argument);
}

TEST(PnormLower, IterationCapIsFlaggedNotHidden) {
  const ComplexMatrix A = tst::random_matrix(4, 4, 5);
  PowerIterationOptions opt;
  opt.max_iterations = 1;
  opt.basis_starts = false;
  opt.ones_start = false;
  opt.random_starts = 1;
  const CertifiedInterval c = pnorm_lower(A, PExponent(1.7), opt);
  EXPECT_FALSE(c.converged);
  EXPECT_LE(c.lower, pnorm_lower(A, PExponent(1.7)).lower + 1e-12);
  EXPECT_TRUE(witness_attains_lower(A, c));
}

TEST(PnormLower, SameSeedSameResult) {
  const ComplexMatrix A = tst::random_matrix(4, 4, 9);
  PowerIterationOptions opt;
  opt.seed = 1234;
  const CertifiedInterval a = pnorm_lower(A, PExponent(2.3), opt);
  const CertifiedInterval b = pnorm_lower(A, PExponent(2.3), opt);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(PnormUpperInterp, Examples) {
  const auto one = PExponent(1.0), two = PExponent(2.0);
  EXPECT_NEAR(pnorm_upper_interp(a_matrix(), PExponent(4.0 / 3.0), {one, two}), std::pow(2.0, 0.25), 1e-12);
  EXPECT_NEAR(pnorm_upper_interp(a_matrix(), PExponent(1.5), {one, two}), std::pow(2.0, 1.0 / 6.0), 1e-12);
  for (double p : {1.1, 1.9})
    EXPECT_NEAR(pnorm_upper_interp(ComplexMatrix::identity(3), PExponent(p), {one, two}), 1.0, 1e-12);
  EXPECT_NEAR(pnorm_upper_interp(ComplexMatrix::identity(3), PExponent(4.0), {two, PExponent::infinity()}), 1.0,
              1e-12);
  EXPECT_NEAR(pnorm_upper_interp(ComplexMatrix::identity(3), PExponent(4.0), {one, PExponent::infinity()}), 1.0,
              1e-12);
}

TEST(PnormUpperInterp, RejectsExponentOutsideEndpoints) {
  EXPECT_THROW(pnorm_upper_interp(a_matrix(), PExponent(3.0), {PExponent(1.0), PExponent(2.0)}),
               std::invalid_argument);
  EXPECT_THROW(pnorm_upper_interp(a_matrix(), PExponent(1.5), {PExponent(1.0), PExponent(1.8)}),
               std::invalid_argument);
}

TEST(RieszThorin, ThetaFromReciprocals) {
  // 1/1.5 = (1 - theta) + theta / 2  =>  theta = 2/3.
  const double b = riesz_thorin_bound(PExponent(1.5), PExponent(1.0), 4.0, PExponent(2.0), 1.0);
  EXPECT_NEAR(b, std::pow(4.0, 1.0 / 3.0), 1e-14);
  EXPECT_DOUBLE_EQ(riesz_thorin_bound(PExponent(1.0), PExponent(1.0), 4.0, PExponent(2.0), 1.0), 4.0);
  EXPECT_DOUBLE_EQ(riesz_thorin_bound(PExponent(1.7), PExponent(1.0), 0.0, PExponent(2.0), 1.0), 0.0);
}

TEST(Pnorm, ExactAtEndpoints) {
  const CertifiedInterval c = pnorm(a_matrix(), PExponent(1.0));
  EXPECT_NEAR(c.lower, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(c.lower, c.upper);
  EXPECT_TRUE(witness_attains_lower(a_matrix(), c));
  const CertifiedInterval inf = pnorm(a_matrix(), PExponent::infinity());
  EXPECT_NEAR(inf.lower, std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(witness_attains_lower(a_matrix(), inf));
}

TEST(Pnorm, ZeroMatrix) {
  for (double p : {1.0, 1.5, 2.0}) {
    const CertifiedInterval c = pnorm(ComplexMatrix(3, 3), PExponent(p));
    EXPECT_EQ(c.lower, 0.0);
    EXPECT_EQ(c.upper, 0.0);
  }
}

TEST(Pnorm, DftConjugatedDiagonalContainsOracle) {
  const cplx d[] = {1.0, cplx(0, 1), -1.0};
  const ComplexMatrix u = dft_matrix(3);
  const ComplexMatrix A = u * ComplexMatrix::diagonal(d) * u.adjoint();
  const CertifiedInterval c = pnorm(A, PExponent(1.5));
  const double oracle = tst::sphere_oracle(A, 1.5);
  EXPECT_TRUE(c.contains(oracle, 1e-6)) << c.lower << " " << c.upper << " vs " << oracle;
  EXPECT_LE(c.lower, c.upper);
}

TEST(TransposeDualCheck, Examples) {
  EXPECT_TRUE(transpose_dual_check(a_matrix(), PExponent(1.3)));
  const ComplexVector d = tst::random_unimodular(4, 3);
  EXPECT_TRUE(transpose_dual_check(ComplexMatrix::diagonal(d), PExponent(2.9)));
  const ComplexMatrix A = tst::random_matrix(2, 2, 31);
  EXPECT_TRUE(transpose_dual_check(A, PExponent(1.7)));
  const double lhs = tst::sphere_oracle(A, 1.7);
  const double rhs = tst::sphere_oracle(A.transpose(), PExponent(1.7).conjugate().value());
  EXPECT_NEAR(lhs, rhs, 1e-6);
}

TEST(FrozenFixture, PowerIterationMatchesStoredOracle) {
  std::ifstream in(std::string(FPNORM_FIXTURE_DIR) + "/oracle_fixture.json");
  ASSERT_TRUE(in);
  const auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc["cases"].size(), 20u);
  for (const auto& item : doc["cases"]) {
    const auto& m = item["matrix"];
    ComplexMatrix A(m["rows"].get<std::size_t>(), m["cols"].get<std::size_t>());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j)
        A(i, j) = {m["entries"][i][j][0].get<double>(), m["entries"][i][j][1].get<double>()};
    for (const char* key : {"1.3", "2.7"}) {
      const double oracle = item["oracle"][key].get<double>();
      EXPECT_NEAR(pnorm_lower(A, parse_exponent(key)).lower, oracle, 1e-4) << key;
    }
  }
}
