#include <doctest.h>

#include "smashhom/matrix.hpp"

using namespace smashhom;

namespace {

struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
  Matrix matrix(size_t rows, size_t cols, unsigned m) {
    Matrix out(rows, cols, m);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        std::vector<Rational> c;
        for (unsigned k = 0; k < euler_phi(m); ++k) c.emplace_back(range(-3, 3));
        out.set(i, j, Cyclotomic::from_coeffs(m, c));
      }
    return out;
  }
  Matrix invertible(size_t n, unsigned m) {
    for (;;) {
      Matrix p = matrix(n, n, m);
      if (p.rank() == n) return p;
    }
  }
};

Matrix diag(unsigned m, std::vector<Cyclotomic> entries) {
  Matrix out(entries.size(), entries.size(), m);
  for (size_t i = 0; i < entries.size(); ++i) out.set(i, i, entries[i]);
  return out;
}

}  // namespace

TEST_CASE("rref basics") {
  MatrixRref rr = Matrix::identity(3, 1).rref();
  CHECK(rr.rank == 3);
  CHECK(rr.pivots == std::vector<size_t>{0, 1, 2});

  CHECK(Matrix(2, 4, 1).rref().rank == 0);
  CHECK(Matrix(2, 4, 1).rref().pivots.empty());

  Matrix dep(2, 2, 1);
  dep.set(0, 0, Cyclotomic::from_rational(1, 1));
  dep.set(0, 1, Cyclotomic::from_rational(1, 2));
  dep.set(1, 0, Cyclotomic::from_rational(1, 2));
  dep.set(1, 1, Cyclotomic::from_rational(1, 4));
  CHECK(dep.rref().rank == 1);
}

TEST_CASE("kernel bases") {
  Matrix g = diag(1, {Cyclotomic::one(1), -Cyclotomic::one(1)});
  Matrix k = (g - Matrix::identity(2, 1)).kernel_basis();
  CHECK(k.cols() == 1);
  CHECK(k.at(0, 0).is_one());
  CHECK(k.at(1, 0).is_zero());

  CHECK(Matrix::identity(3, 1).kernel_basis().cols() == 0);

  Matrix row(1, 2, 1);
  row.set(0, 0, Cyclotomic::one(1));
  row.set(0, 1, Cyclotomic::one(1));
  Matrix k2 = row.kernel_basis();
  CHECK(k2.cols() == 1);
  CHECK(k2.at(0, 0) + k2.at(1, 0) == Cyclotomic::zero(1));
}

TEST_CASE("characteristic polynomials") {
  Polynomial<Cyclotomic> p = Matrix::identity(2, 1).char_poly();
  CHECK(p.degree() == 2);
  CHECK(p[0].as_rational() == 1);
  CHECK(p[1].as_rational() == -2);

  Matrix m = diag(4, {Cyclotomic::root(4), -Cyclotomic::root(4)});
  Polynomial<Cyclotomic> q = m.char_poly();
  CHECK(q[0].as_rational() == 1);
  CHECK(q[1].is_zero());

  // companion matrix of x^3 - 1
  Matrix c(3, 3, 1);
  c.set(0, 2, Cyclotomic::one(1));
  c.set(1, 0, Cyclotomic::one(1));
  c.set(2, 1, Cyclotomic::one(1));
  Polynomial<Cyclotomic> r = c.char_poly();
  CHECK(r[0].as_rational() == -1);
  CHECK(r[1].is_zero());
  CHECK(r[2].is_zero());
  CHECK(r[3].as_rational() == 1);
}

TEST_CASE("exterior traces") {
  auto e = Matrix::identity(4, 1).exterior_traces();
  std::vector<long> binom{1, 4, 6, 4, 1};
  for (size_t n = 0; n <= 4; ++n) CHECK(e[n].as_rational() == binom[n]);

  Matrix m = diag(4, {Cyclotomic::root(4), Cyclotomic::root(4, 3)});
  auto e2 = m.exterior_traces();
  CHECK(e2[0].is_one());
  CHECK(e2[1].is_zero());   // i + i^-1 = 0
  CHECK(e2[2].is_one());    // det

  auto e3 = Matrix::identity(2, 1).scaled(Rational(-1)).exterior_traces();
  CHECK(e3[1].as_rational() == -2);
  CHECK(e3[2].as_rational() == 1);
}

TEST_CASE("restriction to invariant subspaces") {
  Matrix m = diag(1, {Cyclotomic::one(1), Cyclotomic::one(1), -Cyclotomic::one(1)});
  Matrix basis(3, 2, 1);
  basis.set(0, 0, Cyclotomic::one(1));
  basis.set(1, 1, Cyclotomic::one(1));
  CHECK(m.restrict_to(basis) == Matrix::identity(2, 1));

  Matrix m2 = diag(1, {Cyclotomic::one(1), -Cyclotomic::one(1)});
  Matrix skew(2, 1, 1);
  skew.set(0, 0, Cyclotomic::one(1));
  skew.set(1, 0, Cyclotomic::one(1));
  CHECK_THROWS_AS(m2.restrict_to(skew), NotInvariantError);

  Lcg rng(17);
  Matrix any = rng.matrix(3, 3, 4);
  CHECK(any.restrict_to(Matrix::identity(3, 4)) == any);
}

TEST_CASE("rank-nullity on random matrices") {
  Lcg rng(11);
  for (int k = 0; k < 20; ++k) {
    size_t rows = static_cast<size_t>(rng.range(1, 5));
    size_t cols = static_cast<size_t>(rng.range(1, 5));
    Matrix m = rng.matrix(rows, cols, 3);
    CHECK(m.rank() + m.kernel_basis().cols() == cols);
  }
}

TEST_CASE("char poly is a similarity invariant; det relations") {
  Lcg rng(23);
  for (int k = 0; k < 12; ++k) {
    size_t n = static_cast<size_t>(rng.range(1, 4));
    Matrix m = rng.matrix(n, n, 4);
    Matrix p = rng.invertible(n, 4);
    CHECK((p * m * p.inverse()).char_poly() == m.char_poly());

    auto e = m.exterior_traces();
    Cyclotomic det = m.det();
    CHECK(e[n] == det);
    Cyclotomic c0 = m.char_poly()[0];
    CHECK((n % 2 == 0 ? c0 : -c0) == det);
  }
}

TEST_CASE("restriction commutes with the ambient action") {
  Lcg rng(41);
  for (int k = 0; k < 10; ++k) {
    Matrix m = rng.matrix(3, 3, 1);
    // column space of m is m-stable; restrict m to it
    MatrixRref rr = m.rref();
    if (rr.rank == 0) continue;
    Matrix basis = m.select_columns(rr.pivots);
    Matrix x = m.restrict_to(basis);
    CHECK(m * basis == basis * x);
  }
}

TEST_CASE("inverse and solve") {
  Lcg rng(53);
  for (int k = 0; k < 10; ++k) {
    Matrix p = rng.invertible(3, 4);
    CHECK(p * p.inverse() == Matrix::identity(3, 4));
  }
  Matrix sing(2, 2, 1);
  sing.set(0, 0, Cyclotomic::one(1));
  CHECK_THROWS_AS(sing.inverse(), NonInvertibleError);
}

TEST_CASE("zero-dimensional matrices behave") {
  Matrix empty(0, 0, 4);
  CHECK(empty.char_poly().degree() == 0);
  CHECK(empty.exterior_traces().size() == 1);
  CHECK(empty.exterior_traces()[0].is_one());
  CHECK(empty.det().is_one());
  CHECK(empty.inverse().rows() == 0);
}
