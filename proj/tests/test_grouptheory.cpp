#include <doctest.h>

#include <algorithm>
#include <set>

#include "smashhom/group.hpp"
#include "smashhom/group_file.hpp"

using namespace smashhom;

namespace {

Matrix mat1(long v) {
  Matrix m(1, 1, 1);
  m.set(0, 0, Cyclotomic::from_rational(1, Rational(v)));
  return m;
}

MatrixGroup catalog_group(const std::string& name) { return close_group_file(catalog_entry(name).file); }

}  // namespace

TEST_CASE("closure of the sign group") {
  MatrixGroup g = MatrixGroup::close({mat1(-1)});
  CHECK(g.size() == 2);
  CHECK(g.element(0).is_identity());
  CHECK(g.element_order(1) == 2);
}

TEST_CASE("Q8 closure matches the independent enumeration") {
  MatrixGroup q8 = catalog_group("q8");
  CHECK(q8.size() == 8);

  // the eight unit quaternions as matrices over Q(i)
  const Cyclotomic i = Cyclotomic::root(4), one = Cyclotomic::one(4);
  Matrix mi(2, 2, 4), mj(2, 2, 4), mk(2, 2, 4);
  mi.set(0, 0, i); mi.set(1, 1, -i);
  mj.set(0, 1, one); mj.set(1, 0, -one);
  mk = mi * mj;
  std::set<std::string> expected;
  for (const Matrix& u : {Matrix::identity(2, 4), mi, mj, mk}) {
    expected.insert(u.key());
    expected.insert(u.scaled(Rational(-1)).key());
  }
  std::set<std::string> actual;
  for (size_t e = 0; e < q8.size(); ++e) actual.insert(q8.element(e).key());
  CHECK(actual == expected);
}

TEST_CASE("S3 permutation closure is the six permutation matrices") {
  MatrixGroup s3 = catalog_group("s3-perm");
  CHECK(s3.size() == 6);
  std::set<std::string> expected;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms) {
    Matrix m(3, 3, 1);
    for (size_t j = 0; j < 3; ++j) m.set(static_cast<size_t>(p[j]), j, Cyclotomic::one(1));
    expected.insert(m.key());
  }
  std::set<std::string> actual;
  for (size_t e = 0; e < s3.size(); ++e) actual.insert(s3.element(e).key());
  CHECK(actual == expected);
}

TEST_CASE("closure failure modes") {
  Matrix shear(2, 2, 1);  // infinite order
  shear.set(0, 0, Cyclotomic::one(1));
  shear.set(1, 1, Cyclotomic::one(1));
  shear.set(0, 1, Cyclotomic::one(1));
  CHECK_THROWS_AS(MatrixGroup::close({shear}, 64), OrderExceededError);
  CHECK_THROWS_AS(MatrixGroup::close({Matrix(2, 2, 1)}), NonInvertibleGeneratorError);
}

TEST_CASE("conjugacy classes") {
  MatrixGroup triv = MatrixGroup::close({Matrix::identity(2, 1)});
  CHECK(triv.conjugacy_classes().size() == 1);

  MatrixGroup klein = catalog_group("klein-four");
  auto classes = klein.conjugacy_classes();
  CHECK(classes.size() == 4);
  for (const auto& c : classes) CHECK(c.centralizer.size() == 4);

  MatrixGroup q8 = catalog_group("q8");
  auto q8c = q8.conjugacy_classes();
  std::multiset<size_t> sizes;
  for (const auto& c : q8c) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});
  CHECK(q8c[0].rep == 0);  // identity class first
}

TEST_CASE("orbit-stabilizer across the catalog") {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    auto classes = g.conjugacy_classes();
    CHECK(classes.size() == e.expected_classes);
    size_t total = 0;
    for (const auto& c : classes) {
      CHECK(c.members.size() * c.centralizer.size() == g.size());
      total += c.members.size();
    }
    CHECK(total == g.size());
  }
}

TEST_CASE("determinant character") {
  MatrixGroup c2 = catalog_group("c2-line");
  DetCharacter dc = determinant_character(c2);
  CHECK_FALSE(dc.in_SL);
  CHECK(dc.sl_kernel == std::vector<size_t>{0});

  CHECK(determinant_character(catalog_group("q8")).in_SL);

  DetCharacter s3 = determinant_character(catalog_group("s3-perm"));
  CHECK_FALSE(s3.in_SL);
  CHECK(s3.sl_kernel.size() == 3);  // the even permutations
}

TEST_CASE("fixed and moving spaces") {
  Matrix id2 = Matrix::identity(2, 1);
  CHECK(fixed_space(id2).dim() == 2);
  CHECK(moving_space(id2).dim() == 0);

  Matrix g(2, 2, 1);
  g.set(0, 0, Cyclotomic::one(1));
  g.set(1, 1, -Cyclotomic::one(1));
  Subspace fix = fixed_space(g);
  Subspace mov = moving_space(g);
  CHECK(fix.dim() == 1);
  CHECK(mov.dim() == 1);
  CHECK(fix.basis.at(0, 0).is_one());
  CHECK(mov.basis.at(1, 0).is_one());

  Matrix neg = id2.scaled(Rational(-1));
  CHECK(fixed_space(neg).dim() == 0);
  CHECK(moving_space(neg).dim() == 2);
}

TEST_CASE("Reynolds projector identities") {
  for (const char* name : {"c2-line", "q8", "s3-sumzero", "c3-weights"}) {
    MatrixGroup g = catalog_group(name);
    for (const auto& cls : g.conjugacy_classes()) {
      const Matrix& rep = g.element(cls.rep);
      Matrix pi = reynolds_projector(rep);
      CHECK(pi * pi == pi);
      CHECK(rep * pi == pi);
    }
  }
}

TEST_CASE("centralizer stability of the canonical decomposition") {
  for (const char* name : {"q8", "s3-sumzero", "s3-perm"}) {
    MatrixGroup g = catalog_group(name);
    for (const auto& cls : g.conjugacy_classes()) {
      const Matrix& rep = g.element(cls.rep);
      Subspace fix = fixed_space(rep);
      Subspace mov = moving_space(rep);
      CHECK(fix.dim() + mov.dim() == g.dim());
      for (size_t hi : cls.centralizer) {
        const Matrix& h = g.element(hi);
        CHECK_NOTHROW(h.restrict_to(fix.basis));
        CHECK_NOTHROW(h.restrict_to(mov.basis));
      }
      // the restriction of g to V_g has no fixed vectors
      if (mov.dim() > 0) {
        Matrix r = rep.restrict_to(mov.basis);
        CHECK((r - Matrix::identity(mov.dim(), g.field_order())).kernel_basis().cols() == 0);
      }
    }
  }
}

TEST_CASE("doubling") {
  MatrixGroup triv = MatrixGroup::close({Matrix::identity(1, 1)});
  MatrixGroup dt = double_group(triv);
  CHECK(dt.size() == 1);
  CHECK(dt.dim() == 2);

  MatrixGroup c2 = catalog_group("c2-line");
  MatrixGroup dc2 = double_group(c2);
  CHECK(dc2.size() == 2);
  CHECK(dc2.element(1) == Matrix::identity(2, 1).scaled(Rational(-1)));

  for (const char* name : {"c2-line", "klein-four", "s3-sumzero", "q8"}) {
    MatrixGroup dg = double_group(catalog_group(name));
    CHECK(determinant_character(dg).in_SL);
  }
}

TEST_CASE("element orders") {
  MatrixGroup q8 = catalog_group("q8");
  std::multiset<size_t> orders;
  for (size_t i = 0; i < q8.size(); ++i) orders.insert(q8.element_order(i));
  CHECK(orders == std::multiset<size_t>{1, 2, 4, 4, 4, 4, 4, 4});
}
