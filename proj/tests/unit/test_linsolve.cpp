#include <gtest/gtest.h>

#include <random>

#include <Eigen/Dense>

#include "rodsim/linsolve.hpp"

using namespace rodsim;

namespace {

SparseMatrix from_dense(const Eigen::MatrixXd& A) {
  TripletList t(A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      if (A(i, j) != 0.0) t.add(i, j, A(i, j));
    }
  }
  return SparseMatrix(t);
}

}  // namespace

TEST(SparseMatrix, SumsDuplicatesAndReportsBandwidth) {
  TripletList t(4);
  t.add(0, 0, 1.0);
  t.add(0, 0, 2.0);
  t.add(3, 1, 5.0);
  t.add(1, 2, -1.0);
  const SparseMatrix A(t);
  EXPECT_EQ(A.coeff(0, 0), 3.0);
  EXPECT_EQ(A.coeff(2, 2), 0.0);
  EXPECT_EQ(A.lower_bandwidth(), 2u);
  EXPECT_EQ(A.upper_bandwidth(), 1u);
  const std::vector<double> x = {1, 2, 3, 4};
  const auto y = A.multiply(x);
  EXPECT_EQ(y[0], 3.0);
  EXPECT_EQ(y[1], -3.0);
  EXPECT_EQ(y[3], 10.0);
}

TEST(SparseMatrix, RejectsOutOfRange) {
  TripletList t(2);
  EXPECT_THROW(t.add(2, 0, 1.0), AssemblyError);
}

TEST(BandedLU, Identity) {
  const SparseMatrix A = from_dense(Eigen::MatrixXd::Identity(5, 5));
  const std::vector<double> b = {1, -2, 3, 0.5, 7};
  EXPECT_EQ(solve(factorize(A), b), b);
}

TEST(BandedLU, TwoByTwo) {
  Eigen::MatrixXd A(2, 2);
  A << 2, 1, 1, 3;
  const auto x = solve(factorize(from_dense(A)), std::vector<double>{3, 4});
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(BandedLU, SingularThrows) {
  Eigen::MatrixXd A(2, 2);
  A << 1, 1, 1, 1;
  EXPECT_THROW(factorize(from_dense(A)), SingularMatrixError);
}

TEST(BandedLU, ZeroRightHandSide) {
  Eigen::MatrixXd A(3, 3);
  A << 4, 1, 0, 1, 4, 1, 0, 1, 4;
  for (double v : solve(factorize(from_dense(A)), std::vector<double>(3, 0.0))) EXPECT_EQ(v, 0.0);
}

TEST(BandedLU, PermutedDiagonalNeedsPivoting) {
  // Row i has its only entry in column (i + 2) mod 5.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(5, 5);
  const double d[] = {2, -4, 8, 0.5, 10};
  for (int i = 0; i < 5; ++i) A(i, (i + 2) % 5) = d[i];
  const std::vector<double> b = {1, 2, 3, 4, 5};
  const auto x = solve(factorize(from_dense(A)), b);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(x[(i + 2) % 5], b[i] / d[i], 1e-15);
}

TEST(BandedLU, RandomBandedSpdAgainstDenseOracle) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 50, bw = 4;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - bw / 2); j <= i; ++j) B(i, j) = dist(rng);
  }
  Eigen::MatrixXd A = B * B.transpose() + n * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = dist(rng);
  const Eigen::VectorXd oracle = A.partialPivLu().solve(b);

  const std::vector<double> bv(b.data(), b.data() + n);
  const auto x = solve(factorize(from_dense(A)), bv);
  for (int i = 0; i < n; ++i) EXPECT_NEAR(x[i], oracle[i], 1e-10);
}

TEST(BandedLU, RandomNonsymmetricBandedSystem) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 40;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 5); ++j) A(i, j) = dist(rng);
  }
  Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
  const Eigen::VectorXd oracle = A.fullPivLu().solve(b);
  const auto x = solve(factorize(from_dense(A)), std::vector<double>(n, 1.0));
  const double scale = oracle.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) EXPECT_NEAR(x[i], oracle[i], 1e-9 * scale);
}

TEST(BandedLU, SizeMismatchThrows) {
  const SparseMatrix A = from_dense(Eigen::MatrixXd::Identity(3, 3));
  EXPECT_THROW(solve(factorize(A), std::vector<double>{1, 2}), SolverError);
}

TEST(RelativeResidual, Definition) {
  const SparseMatrix A = from_dense(Eigen::MatrixXd::Identity(2, 2));
  const std::vector<double> x = {1, 1}, b = {1, 2};
  EXPECT_NEAR(relative_residual(A, x, b), 1.0 / std::sqrt(5.0), 1e-15);
}
