#include "tropopt/matrix.hpp"

#include "tropopt/errors.hpp"

namespace tropopt {

bool TropVector::is_regular() const {
  for (const Scalar& e : entries_) {
    if (e.is_zero()) return false;
  }
  return true;
}

bool TropVector::is_nonzero() const {
  for (const Scalar& e : entries_) {
    if (e.is_finite()) return true;
  }
  return false;
}

TropMatrix TropVector::as_column() const {
  TropMatrix m(dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) m.at(i, 0) = entries_[i];
  return m;
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be positive");
}

TropMatrix TropMatrix::identity(std::size_t n, const Semifield& sf) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sf.one();
  return m;
}

TropMatrix TropMatrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::size_t r = rows.size();
  std::size_t c = rows.begin()->size();
  TropMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeMismatch("ragged initializer");
    std::size_t j = 0;
    for (const Scalar& e : row) m.at(i, j++) = e;
    ++i;
  }
  return m;
}

bool TropMatrix::is_all_zero() const {
  for (const Scalar& e : entries_) {
    if (e.is_finite()) return false;
  }
  return true;
}

TropVector TropMatrix::column(std::size_t j) const {
  TropVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

TropVector TropMatrix::row(std::size_t i) const {
  TropVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

TropVector TropMatrix::as_vector() const {
  if (cols_ != 1) throw ShapeMismatch("as_vector requires a single column");
  return column(0);
}

}  // namespace tropopt
