#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tropopt/semifield.hpp"

namespace tropopt {

class TropMatrix;

/// Column vector over a semifield. A vector is "regular" when no entry is
/// zero and "nonzero" when at least one entry is finite.
class TropVector {
 public:
  explicit TropVector(std::size_t dim, Scalar fill = Scalar::zero())
      : entries_(dim, fill) {}
  TropVector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  bool is_regular() const;
  bool is_nonzero() const;

  const std::vector<Scalar>& entries() const { return entries_; }

  TropMatrix as_column() const;

  bool operator==(const TropVector& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Scalar> entries_;
};

/// Dense rectangular matrix over a semifield, row-major. Zero entries are
/// stored explicitly; target sizes are desk scale (n up to a few dozen).
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::zero());

  static TropMatrix identity(std::size_t n, const Semifield& sf);
  static TropMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  bool is_square() const { return rows_ == cols_; }
  bool is_all_zero() const;

  TropVector column(std::size_t j) const;
  TropVector row(std::size_t i) const;
  TropVector as_vector() const;  // requires cols() == 1

  const std::vector<Scalar>& entries() const { return entries_; }

  bool operator==(const TropMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Row/column regularity flags of a matrix ("regular" = both).
struct RegularityClass {
  bool row_regular = false;
  bool column_regular = false;
  bool regular = false;
};

}  // namespace tropopt
