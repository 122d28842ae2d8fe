#include "smashhom/matrix.hpp"

#include <utility>

namespace smashhom {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shape mismatch");
  if (a.order() != b.order()) throw OrderMismatchError("matrix field order mismatch");
}

}  // namespace

Matrix Matrix::identity(size_t n, unsigned order) {
  Matrix m(n, n, order);
  const Cyclotomic one = Cyclotomic::one(order);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

void Matrix::set(size_t i, size_t j, Cyclotomic v) {
  if (v.order() != order_) throw OrderMismatchError("matrix entry has wrong field order");
  a_[i * cols_ + j] = std::move(v);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  if (a.order() != b.order()) throw OrderMismatchError("matrix field order mismatch");
  Matrix r(a.rows(), b.cols(), a.order());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Cyclotomic& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const Cyclotomic& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix r = a;
  for (size_t i = 0; i < r.rows_ * r.cols_; ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix r = a;
  for (size_t i = 0; i < r.rows_ * r.cols_; ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ && a.a_ == b.a_;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x.scaled(s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Cyclotomic Matrix::trace() const {
  if (rows_ != cols_) throw ShapeError("trace of non-square matrix");
  Cyclotomic t = Cyclotomic::zero(order_);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Matrix::key() const {
  std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ";";
  for (const auto& x : a_) {
    k += x.str();
    k += ',';
  }
  return k;
}

size_t Matrix::rank() const { return rref().rank; }

MatrixRref Matrix::rref() const {
  MatrixRref out{*this, {}, 0};
  Matrix& m = out.reduced;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pr = r;
    while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (size_t j = c; j < cols_; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Cyclotomic inv = m.at(r, c).inverse();
    if (!m.at(r, c).is_one())
      for (size_t j = c; j < cols_; ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) = m.at(r, j) * inv;
    for (size_t q = 0; q < rows_; ++q) {
      if (q == r || m.at(q, c).is_zero()) continue;
      const Cyclotomic f = m.at(q, c);
      for (size_t j = c; j < cols_; ++j)
        if (!m.at(r, j).is_zero()) m.at(q, j).submul(f, m.at(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = out.pivots.size();
  return out;
}

Matrix Matrix::kernel_basis() const { return kernel_from_rref(rref(), cols_, order_); }

Matrix Matrix::kernel_from_rref(const MatrixRref& rr, size_t cols, unsigned order) {
  std::vector<size_t> free_cols;
  {
    size_t p = 0;
    for (size_t c = 0; c < cols; ++c) {
      if (p < rr.pivots.size() && rr.pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(cols, free_cols.size(), order);
  const Cyclotomic one = Cyclotomic::one(order);
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    const size_t f = free_cols[idx];
    k.at(f, idx) = one;
    for (size_t p = 0; p < rr.pivots.size(); ++p) k.at(rr.pivots[p], idx) = -rr.reduced.at(p, f);
  }
  return k;
}

Polynomial<Cyclotomic> Matrix::char_poly() const {
  if (rows_ != cols_) throw ShapeError("char_poly of non-square matrix");
  const size_t d = rows_;
  std::vector<Cyclotomic> c(d + 1, Cyclotomic::zero(order_));
  c[d] = Cyclotomic::one(order_);
  if (d == 0) return Polynomial<Cyclotomic>(std::move(c), "x");
  Matrix a = *this;
  for (size_t k = 1; k <= d; ++k) {
    if (k > 1) {
      Matrix shifted = a;
      for (size_t i = 0; i < d; ++i) shifted.at(i, i) += c[d - k + 1];
      a = *this * shifted;
    }
    c[d - k] = -a.trace().scaled(Rational(1, static_cast<unsigned long>(k)));
  }
  return Polynomial<Cyclotomic>(std::move(c), "x");
}

std::vector<Cyclotomic> Matrix::exterior_traces() const {
  if (rows_ != cols_) throw ShapeError("exterior_traces of non-square matrix");
  const size_t d = rows_;
  const Polynomial<Cyclotomic> cp = char_poly();
  std::vector<Cyclotomic> e(d + 1, Cyclotomic::zero(order_));
  // det(I + zM) = sum_n e_n z^n; comparing with det(xI - M) at x = -1/z
  // gives e_n = (-1)^n c_{d-n}.
  for (size_t n = 0; n <= d; ++n) {
    Cyclotomic v = cp[d - n];
    e[n] = (n % 2 == 0) ? v : -v;
  }
  return e;
}

Cyclotomic Matrix::det() const {
  if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
  const size_t d = rows_;
  Matrix m = *this;
  Cyclotomic result = Cyclotomic::one(order_);
  for (size_t c = 0; c < d; ++c) {
    size_t pr = c;
    while (pr < d && m.at(pr, c).is_zero()) ++pr;
    if (pr == d) return Cyclotomic::zero(order_);
    if (pr != c) {
      for (size_t j = c; j < d; ++j) std::swap(m.at(c, j), m.at(pr, j));
      result = -result;
    }
    const Cyclotomic& pivot = m.at(c, c);
    result = result * pivot;
    const Cyclotomic pinv = pivot.inverse();
    for (size_t q = c + 1; q < d; ++q) {
      if (m.at(q, c).is_zero()) continue;
      const Cyclotomic f = m.at(q, c) * pinv;
      for (size_t j = c; j < d; ++j)
        if (!m.at(c, j).is_zero()) m.at(q, j).submul(f, m.at(c, j));
    }
  }
  return result;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
  MatrixRref rr = hstack(*this, identity(rows_, order_)).rref();
  if (rr.rank != rows_ || (rows_ > 0 && rr.pivots.back() >= rows_))
    throw NonInvertibleError("matrix is singular");
  Matrix out(rows_, rows_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) out.at(i, j) = rr.reduced.at(i, rows_ + j);
  return out;
}

Matrix Matrix::restrict_to(const Matrix& basis) const {
  if (rows_ != cols_) throw ShapeError("restriction of non-square matrix");
  if (basis.rows() != rows_) throw ShapeError("basis ambient dimension mismatch");
  return solve_columns(basis, *this * basis);
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
  Matrix out(rows_, idx.size(), order_);
  for (size_t j = 0; j < idx.size(); ++j)
    for (size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  if (a.order() != b.order()) throw OrderMismatchError("hstack field order mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), a.order());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw OrderMismatchError("block_diag field order mismatch");
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.order());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix Matrix::solve_columns(const Matrix& a, const Matrix& rhs) {
  if (a.rows() != rhs.rows()) throw ShapeError("solve shape mismatch");
  MatrixRref rr = hstack(a, rhs).rref();
  for (size_t p : rr.pivots)
    if (p >= a.cols()) throw NotInvariantError("right-hand side outside the column space");
  if (rr.rank != a.cols()) throw Error("solve_columns: basis columns are dependent");
  Matrix x(a.cols(), rhs.cols(), a.order());
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t j = 0; j < rhs.cols(); ++j) x.at(i, j) = rr.reduced.at(i, a.cols() + j);
  return x;
}

}  // namespace smashhom
