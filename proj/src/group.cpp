#include "smashhom/group.hpp"

#include <algorithm>

namespace smashhom {

namespace {
constexpr size_t kTableLimit = 512;  // build the full mult table below this
}

MatrixGroup MatrixGroup::close(const std::vector<Matrix>& generators, size_t max_order) {
  if (generators.empty())
    throw Error("close needs at least one generator; pass the identity for the trivial group");
  MatrixGroup g;
  g.dim_ = static_cast<unsigned>(generators[0].rows());
  g.order_m_ = generators[0].order();
  for (const Matrix& gen : generators) {
    if (gen.rows() != gen.cols() || gen.rows() != g.dim_)
      throw ShapeError("generators must be square matrices of equal size");
    if (gen.order() != g.order_m_) throw OrderMismatchError("generators must share one field order");
    if (gen.rank() != g.dim_) throw NonInvertibleGeneratorError("generator is not invertible");
  }

  Matrix id = Matrix::identity(g.dim_, g.order_m_);
  g.elems_.push_back(id);
  g.index_.emplace(id.key(), 0);

  for (size_t qi = 0; qi < g.elems_.size(); ++qi) {
    for (const Matrix& gen : generators) {
      Matrix p = g.elems_[qi] * gen;
      std::string k = p.key();
      if (g.index_.count(k)) continue;
      if (g.elems_.size() >= max_order)
        throw OrderExceededError("group closure exceeds the order cap " + std::to_string(max_order));
      g.index_.emplace(std::move(k), g.elems_.size());
      g.elems_.push_back(std::move(p));
    }
  }

  for (const Matrix& gen : generators) g.gen_idx_.push_back(g.index_.at(gen.key()));

  g.inv_.resize(g.elems_.size());
  for (size_t i = 0; i < g.elems_.size(); ++i) g.inv_[i] = g.index_of(g.elems_[i].inverse());

  if (g.elems_.size() <= kTableLimit) {
    g.table_.assign(g.elems_.size(), std::vector<size_t>(g.elems_.size()));
    for (size_t i = 0; i < g.elems_.size(); ++i)
      for (size_t j = 0; j < g.elems_.size(); ++j)
        g.table_[i][j] = g.index_of(g.elems_[i] * g.elems_[j]);
  }
  return g;
}

size_t MatrixGroup::mul(size_t i, size_t j) const {
  if (!table_.empty()) return table_[i][j];
  return index_of(elems_.at(i) * elems_.at(j));
}

size_t MatrixGroup::index_of(const Matrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw Error("matrix is not a group element");
  return it->second;
}

size_t MatrixGroup::element_order(size_t i) const {
  size_t p = i;
  for (size_t n = 1; n <= size(); ++n) {
    if (p == 0) return n;
    p = mul(p, i);
  }
  throw Error("element order exceeds group order");  // unreachable for a group
}

std::vector<ConjClass> MatrixGroup::conjugacy_classes() const {
  const size_t n = size();
  std::vector<bool> seen(n, false);
  std::vector<ConjClass> classes;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ConjClass cls;
    cls.rep = i;
    for (size_t t = 0; t < n; ++t) {
      size_t c = mul(mul(t, i), inv(t));
      if (!seen[c]) {
        seen[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    for (size_t h = 0; h < n; ++h)
      if (mul(h, i) == mul(i, h)) cls.centralizer.push_back(h);
    classes.push_back(std::move(cls));
  }
  return classes;
}

DetCharacter determinant_character(const MatrixGroup& g) {
  DetCharacter out;
  out.in_SL = true;
  const Cyclotomic one = Cyclotomic::one(g.field_order());
  for (size_t i = 0; i < g.size(); ++i) {
    Cyclotomic d = g.element(i).det();
    if (d == one)
      out.sl_kernel.push_back(i);
    else
      out.in_SL = false;
    out.det.push_back(std::move(d));
  }
  // The kernel of a character is a subgroup; cheap to verify outright.
  for (size_t a : out.sl_kernel)
    for (size_t b : out.sl_kernel)
      if (!(out.det[g.mul(a, b)] == one)) throw Error("determinant kernel is not closed");
  return out;
}

size_t matrix_order(const Matrix& g, size_t cap) {
  if (g.rows() != g.cols()) throw ShapeError("order of non-square matrix");
  Matrix p = g;
  for (size_t n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p * g;
  }
  throw OrderExceededError("matrix order exceeds cap " + std::to_string(cap));
}

Matrix reynolds_projector(const Matrix& g) {
  const size_t n = matrix_order(g);
  Matrix acc = Matrix::identity(g.rows(), g.order());
  Matrix p = g;
  for (size_t k = 1; k < n; ++k) {
    acc = acc + p;
    p = p * g;
  }
  return acc.scaled(Rational(1, static_cast<unsigned long>(n)));
}

Subspace fixed_space(const Matrix& g) {
  Matrix diff = g - Matrix::identity(g.rows(), g.order());
  return Subspace{g.rows(), diff.kernel_basis()};
}

Subspace moving_space(const Matrix& g) {
  Matrix m = Matrix::identity(g.rows(), g.order()) - reynolds_projector(g);
  MatrixRref rr = m.rref();
  return Subspace{g.rows(), m.select_columns(rr.pivots)};
}

MatrixGroup double_group(const MatrixGroup& g, size_t max_order) {
  std::vector<Matrix> gens;
  for (size_t idx : g.generator_indices()) {
    const Matrix& m = g.element(idx);
    gens.push_back(Matrix::block_diag(m, m.inverse().transpose()));
  }
  // Trivial group: no generators, but the doubled dimension must survive.
  MatrixGroup doubled =
      gens.empty() ? MatrixGroup::close({Matrix::identity(2 * g.dim(), g.field_order())}, max_order)
                   : MatrixGroup::close(gens, max_order);
  if (doubled.size() != g.size()) throw Error("doubling changed the group order");
  return doubled;
}

}  // namespace smashhom
