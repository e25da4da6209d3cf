#include "rodsim/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rodsim {

void TripletList::add(std::size_t row, std::size_t col, double value) {
  if (row >= n_ || col >= n_) {
    throw AssemblyError("triplet (" + std::to_string(row) + ", " +
                        std::to_string(col) + ") outside a " +
                        std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
  }
  entries_.push_back({row, col, value});
}

SparseMatrix::SparseMatrix(const TripletList& triplets) : n_(triplets.n_) {
  auto entries = triplets.entries_;
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  row_ptr_.assign(n_ + 1, 0);
  cols_.reserve(entries.size());
  values_.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size();) {
    const auto [row, col, v0] = entries[k];
    double v = v0;
    std::size_t m = k + 1;
    for (; m < entries.size() && entries[m].row == row && entries[m].col == col; ++m) {
      v += entries[m].value;
    }
    cols_.push_back(col);
    values_.push_back(v);
    ++row_ptr_[row + 1];
    k = m;
  }
  for (std::size_t i = 0; i < n_; ++i) row_ptr_[i + 1] += row_ptr_[i];
}

double SparseMatrix::coeff(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k) {
    if (cols_[k] == col) return values_[k];
  }
  return 0.0;
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) acc += values_[k] * x[cols_[k]];
    y[i] = acc;
  }
  return y;
}

std::size_t SparseMatrix::lower_bandwidth() const {
  std::size_t bw = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      if (cols_[k] < i) bw = std::max(bw, i - cols_[k]);
    }
  }
  return bw;
}

std::size_t SparseMatrix::upper_bandwidth() const {
  std::size_t bw = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      if (cols_[k] > i) bw = std::max(bw, cols_[k] - i);
    }
  }
  return bw;
}

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

BandedLU factorize(const SparseMatrix& A) {
  BandedLU lu;
  const std::size_t n = A.dim();
  lu.n_ = n;
  lu.kl_ = A.lower_bandwidth();
  lu.ku_ = A.upper_bandwidth();
  const std::size_t kl = lu.kl_;
  // Row interchanges push U up to kl + ku entries right of the diagonal.
  const std::size_t reach = kl + lu.ku_;
  lu.width_ = 2 * kl + lu.ku_ + 1;
  lu.band_.assign(n * lu.width_, 0.0);
  lu.mult_.assign(n * std::max<std::size_t>(kl, 1), 0.0);
  lu.piv_.resize(n);
  lu.a_ = A;

  const auto rp = A.row_ptr();
  const auto cols = A.cols();
  const auto vals = A.values();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) lu.u(i, cols[k]) = vals[k];
  }

  lu.min_pivot_ = std::numeric_limits<double>::infinity();
  lu.max_pivot_ = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    const std::size_t last_col = std::min(n - 1, k + reach);
    std::size_t p = k;
    double best = std::abs(lu.u(k, k));
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      const double v = std::abs(lu.u(r, k));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best == 0.0) {
      throw SingularMatrixError("zero pivot in column " + std::to_string(k) +
                                " of " + std::to_string(n));
    }
    lu.piv_[k] = p;
    if (p != k) {
      for (std::size_t j = k; j <= last_col; ++j) std::swap(lu.u(k, j), lu.u(p, j));
    }
    const double pivot = lu.u(k, k);
    lu.min_pivot_ = std::min(lu.min_pivot_, best);
    lu.max_pivot_ = std::max(lu.max_pivot_, best);
    double* mult = lu.mult_.data() + k * std::max<std::size_t>(kl, 1);
    const double* urow = &lu.u(k, k);
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      const double l = lu.u(r, k) / pivot;
      mult[r - k - 1] = l;
      if (l == 0.0) continue;
      double* target = &lu.u(r, k);
      for (std::size_t j = 1; j <= last_col - k; ++j) target[j] -= l * urow[j];
    }
  }
  return lu;
}

std::vector<double> BandedLU::substitute(std::vector<double> b) const {
  const std::size_t stride = std::max<std::size_t>(kl_, 1);
  for (std::size_t k = 0; k < n_; ++k) {
    if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
    const double bk = b[k];
    if (bk == 0.0) continue;
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    const double* mult = mult_.data() + k * stride;
    for (std::size_t r = k + 1; r <= last_row; ++r) b[r] -= mult[r - k - 1] * bk;
  }
  const std::size_t reach = kl_ + ku_;
  for (std::size_t i = n_; i-- > 0;) {
    const std::size_t last_col = std::min(n_ - 1, i + reach);
    const double* urow = band_.data() + i * width_ + kl_;
    double acc = b[i];
    for (std::size_t j = 1; j <= last_col - i; ++j) acc -= urow[j] * b[i + j];
    b[i] = acc / urow[0];
  }
  return b;
}

std::vector<double> solve(const BandedLU& lu, std::span<const double> b) {
  if (b.size() != lu.n_) {
    throw SolverError("solve: right-hand side has " + std::to_string(b.size()) +
                      " entries for a system of dimension " + std::to_string(lu.n_));
  }
  std::vector<double> x = lu.substitute(std::vector<double>(b.begin(), b.end()));
  // A small relative residual still leaves absolute errors near 1e-13 in the
  // constraint rows on fine meshes, so the refinement round always runs.
  const auto ax = lu.a_.multiply(x);
  std::vector<double> r(b.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - ax[i];
  const auto dx = lu.substitute(std::move(r));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  return x;
}

double relative_residual(const SparseMatrix& A, std::span<const double> x,
                         std::span<const double> b) {
  const auto ax = A.multiply(x);
  double num = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) num += (ax[i] - b[i]) * (ax[i] - b[i]);
  const double den = norm2(b);
  return den > 0.0 ? std::sqrt(num) / den : std::sqrt(num);
}

}  // namespace rodsim
