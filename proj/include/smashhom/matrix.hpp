#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smashhom/cyclotomic.hpp"
#include "smashhom/polynomial.hpp"

namespace smashhom {

struct MatrixRref;

/// Dense matrix over Q(zeta_m), row-major. All entries share one field order.
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, unsigned order)
      : rows_(rows), cols_(cols), order_(order), a_(rows * cols, Cyclotomic::zero(order)) {}

  static Matrix identity(size_t n, unsigned order);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Cyclotomic& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

  void set(size_t i, size_t j, Cyclotomic v);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix scaled(const Rational& s) const;
  Matrix transpose() const;
  Cyclotomic trace() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Canonical printed form of all entries; used as a hash key for group
  /// elements.
  std::string key() const;

  MatrixRref rref() const;

  /// Columns form a basis of the right kernel; column count = cols - rank.
  /// Each basis vector has a unit at "its" free column and zeros at the other
  /// free columns, so kernel coordinates can be read off directly.
  Matrix kernel_basis() const;
  static Matrix kernel_from_rref(const MatrixRref& rr, size_t cols, unsigned order);

  size_t rank() const;

  /// det(xI - M), exact, division-free up to integer divisions
  /// (Faddeev-LeVerrier). Variable tag "x".
  Polynomial<Cyclotomic> char_poly() const;

  /// Traces of the exterior powers: e_n = tr Lambda^n(M) for n = 0..d,
  /// read off the characteristic polynomial. e_0 = 1, e_d = det(M).
  std::vector<Cyclotomic> exterior_traces() const;

  Cyclotomic det() const;
  Matrix inverse() const;  // throws NonInvertibleError

  /// The matrix X with M * basis = basis * X, i.e. M in the coordinates of
  /// the subspace spanned by the basis columns. Throws NotInvariantError if
  /// the subspace is not M-stable.
  Matrix restrict_to(const Matrix& basis) const;

  /// Columns of this matrix at the given indices.
  Matrix select_columns(const std::vector<size_t>& idx) const;
  /// [A | B] side by side.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  /// Solves A x = rhs for each rhs column; throws NotInvariantError if some
  /// column is outside the column space, Error if A has dependent columns.
  static Matrix solve_columns(const Matrix& a, const Matrix& rhs);

 private:
  size_t rows_, cols_;
  unsigned order_;
  std::vector<Cyclotomic> a_;
};

struct MatrixRref {
  Matrix reduced;
  std::vector<size_t> pivots;  // pivot column indices, increasing
  size_t rank = 0;
};

}  // namespace smashhom
