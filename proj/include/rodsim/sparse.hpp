#pragma once

#include <span>
#include <vector>

#include "rodsim/types.hpp"

namespace rodsim {

/// Coordinate-format accumulator; duplicates are summed on compression.
class TripletList {
 public:
  explicit TripletList(std::size_t n) : n_(n) {}
  void add(std::size_t row, std::size_t col, double value);
  std::size_t dim() const { return n_; }

 private:
  friend class SparseMatrix;
  struct Entry {
    std::size_t row, col;
    double value;
  };
  std::size_t n_;
  std::vector<Entry> entries_;
};

/// Square row-compressed matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(const TripletList& triplets);

  std::size_t dim() const { return n_; }
  std::size_t nonzeros() const { return values_.size(); }
  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const std::size_t> cols() const { return cols_; }
  std::span<const double> values() const { return values_; }

  /// Entry lookup (zero when structurally absent).
  double coeff(std::size_t row, std::size_t col) const;
  std::vector<double> multiply(std::span<const double> x) const;
  /// Largest |i - j| below and above the diagonal over stored entries.
  std::size_t lower_bandwidth() const;
  std::size_t upper_bandwidth() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> cols_;
  std::vector<double> values_;
};

double norm2(std::span<const double> v);

}  // namespace rodsim
