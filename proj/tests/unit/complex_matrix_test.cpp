#include "fpnorm/complex_matrix.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace fpnorm;

TEST(ComplexMatrix, RejectsRaggedAndNonFiniteInput) {
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
  EXPECT_THROW((ComplexMatrix{{1.0, std::numeric_limits<double>::quiet_NaN()}}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(1, 1, {cplx(0.0, std::numeric_limits<double>::infinity())}), std::invalid_argument);
}

TEST(ComplexMatrix, ApplyMatchesNaiveProduct) {
  const ComplexMatrix A = tst::random_matrix(3, 4, 1);
  const ComplexMatrix x = tst::random_matrix(4, 1, 2);
  const ComplexVector y = A * x.data();
  const ComplexMatrix Ax = A * x;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(y[i] - Ax(i, 0)), 0.0, 1e-14);
}

TEST(ComplexMatrix, AdjointApplyIsConjugateTranspose) {
  const ComplexMatrix A = tst::random_matrix(3, 2, 3);
  const ComplexMatrix y = tst::random_matrix(3, 1, 4);
  ComplexVector z(2);
  A.apply_adjoint(y.data(), z);
  const ComplexMatrix expected = A.adjoint() * y;
  for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(z[j] - expected(j, 0)), 0.0, 1e-14);
  EXPECT_EQ(A.adjoint().adjoint(), A);
  EXPECT_EQ(A.transpose().transpose(), A);
}

TEST(ComplexMatrix, MaxSumsReportLocation) {
  const ComplexMatrix A{{1.0, -5.0}, {cplx(0.0, 2.0), 1.0}};
  const IndexedSum col = A.max_column_abs_sum();
  const IndexedSum row = A.max_row_abs_sum();
  EXPECT_EQ(col.index, 1u);
  EXPECT_DOUBLE_EQ(col.value, 6.0);
  EXPECT_EQ(row.index, 0u);
  EXPECT_DOUBLE_EQ(row.value, 6.0);
  EXPECT_DOUBLE_EQ(A.max_abs(), 5.0);
}

TEST(ComplexMatrix, PermutationMatrixSendsBasisVectors) {
  const std::size_t perm[] = {2, 0, 1};
  const ComplexMatrix P = permutation_matrix(perm);
  for (std::size_t j = 0; j < 3; ++j) {
    ComplexVector e(3);
    e[j] = 1.0;
    const ComplexVector Pe = P * e;
    EXPECT_EQ(Pe[perm[j]], cplx(1.0));
  }
  EXPECT_EQ(P * P.transpose(), ComplexMatrix::identity(3));
}

TEST(ComplexMatrix, IdentityAndDiagonal) {
  const cplx d[] = {2.0, cplx(0, 1)};
  const ComplexMatrix D = ComplexMatrix::diagonal(d);
  EXPECT_EQ(D(1, 1), cplx(0, 1));
  EXPECT_EQ(D(0, 1), cplx(0));
  EXPECT_EQ(ComplexMatrix::identity(2) * D, D);
  EXPECT_TRUE(ComplexMatrix(3, 3).is_zero());
  EXPECT_DOUBLE_EQ(max_abs_difference(D, ComplexMatrix::identity(2)), std::sqrt(2.0));
}
