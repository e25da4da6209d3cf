#pragma once

#include "rodsim/sparse.hpp"

namespace rodsim {

/// LU factors of a banded matrix with row partial pivoting, in the layout
/// of LAPACK's gbtrf: interchanges are recorded per column and applied in
/// order, and the multipliers of each column are kept separately.
class BandedLU {
 public:
  std::size_t dim() const { return n_; }
  std::size_t kl() const { return kl_; }
  std::size_t ku() const { return ku_; }
  double min_abs_pivot() const { return min_pivot_; }
  double max_abs_pivot() const { return max_pivot_; }

 private:
  friend BandedLU factorize(const SparseMatrix& A);
  friend std::vector<double> solve(const BandedLU& lu, std::span<const double> b);

  double& u(std::size_t i, std::size_t j) { return band_[i * width_ + (j + kl_ - i)]; }
  double u(std::size_t i, std::size_t j) const { return band_[i * width_ + (j + kl_ - i)]; }
  std::vector<double> substitute(std::vector<double> b) const;

  std::size_t n_ = 0, kl_ = 0, ku_ = 0, width_ = 0;
  std::vector<double> band_;   // row i holds columns [i - kl, i + kl + ku]
  std::vector<double> mult_;   // column k multipliers for rows k+1..k+kl
  std::vector<std::size_t> piv_;
  double min_pivot_ = 0.0, max_pivot_ = 0.0;
  SparseMatrix a_;  // kept for residual evaluation during refinement
};

/// Throws SingularMatrixError on an exact zero pivot; the message names the
/// column.
BandedLU factorize(const SparseMatrix& A);

/// Solves A x = b followed by one round of iterative refinement.
std::vector<double> solve(const BandedLU& lu, std::span<const double> b);

/// ||A x - b|| / ||b|| (absolute residual when b = 0).
double relative_residual(const SparseMatrix& A, std::span<const double> x,
                         std::span<const double> b);

}  // namespace rodsim
