#pragma once

#include <unordered_map>
#include <vector>

#include "smashhom/matrix.hpp"

namespace smashhom {

struct Subspace {
  size_t ambient = 0;
  Matrix basis;  // independent columns
  size_t dim() const { return basis.cols(); }
};

struct ConjClass {
  size_t rep = 0;                   // element index of the representative
  std::vector<size_t> members;      // sorted element indices
  std::vector<size_t> centralizer;  // sorted element indices of Z_rep
};

/// Finite subgroup of GL(d, Q(zeta_m)), closed under multiplication and
/// inverse. Element 0 is the identity; the element order is the BFS
/// discovery order from the generators, so it is reproducible.
class MatrixGroup {
 public:
  static MatrixGroup close(const std::vector<Matrix>& generators, size_t max_order = 10000);

  size_t size() const { return elems_.size(); }
  unsigned dim() const { return dim_; }
  unsigned field_order() const { return order_m_; }
  const Matrix& element(size_t i) const { return elems_.at(i); }
  const std::vector<size_t>& generator_indices() const { return gen_idx_; }

  size_t mul(size_t i, size_t j) const;
  size_t inv(size_t i) const { return inv_.at(i); }
  size_t index_of(const Matrix& m) const;

  /// Smallest n >= 1 with element(i)^n = identity.
  size_t element_order(size_t i) const;

  /// Partition into conjugation orbits, identity class first, each with the
  /// centralizer of its representative. |members| * |centralizer| = |G|.
  std::vector<ConjClass> conjugacy_classes() const;

 private:
  MatrixGroup() = default;

  unsigned dim_ = 0;
  unsigned order_m_ = 1;
  std::vector<Matrix> elems_;
  std::vector<size_t> gen_idx_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<size_t> inv_;
  std::vector<std::vector<size_t>> table_;  // full mult table for small groups
};

struct DetCharacter {
  std::vector<Cyclotomic> det;    // per element
  bool in_SL = false;             // all determinants equal 1
  std::vector<size_t> sl_kernel;  // indices with det = 1 (a subgroup)
};

DetCharacter determinant_character(const MatrixGroup& g);

/// Order of a finite-order matrix, verified by iterated multiplication.
size_t matrix_order(const Matrix& g, size_t cap = 10000);

/// V^g = ker(g - I).
Subspace fixed_space(const Matrix& g);
/// V_g = im(I - pi_g) with pi_g the Reynolds projector of <g>; the canonical
/// g-stable complement of V^g.
Subspace moving_space(const Matrix& g);
/// The Reynolds projector (1/n) sum_k g^k of the cyclic group generated by g.
Matrix reynolds_projector(const Matrix& g);

/// The same group acting on V + V* via g -> blockdiag(g, (g^-1)^T); lands in
/// SL(2d) and preserves the group order.
MatrixGroup double_group(const MatrixGroup& g, size_t max_order = 10000);

}  // namespace smashhom
