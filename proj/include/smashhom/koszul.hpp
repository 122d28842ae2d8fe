#pragma once

#include <map>
#include <utility>
#include <vector>

#include "smashhom/group.hpp"
#include "smashhom/matrix.hpp"
#include "smashhom/monomials.hpp"

namespace smashhom {

enum class ComplexSide { Homology, Cohomology };

/// Dimension table: (homological degree n, internal degree D) -> dim.
/// Only nonzero entries are stored.
struct GradedDims {
  std::map<std::pair<long, long>, long> dims;

  long at(long n, long degree) const {
    auto it = dims.find({n, degree});
    return it == dims.end() ? 0 : it->second;
  }
  void add(long n, long degree, long v) {
    if (v != 0) dims[{n, degree}] += v;
  }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// The degree-truncated Koszul complex computing H(S(V), S(V)g), with the
/// right module structure twisted by g.
///
/// Homology side: slot (p, D) has basis (monomial a of degree D - p) tensor
/// (p-index wedge, each wedge generator in internal degree 1); the
/// differential drops a wedge index j and multiplies by x_j a - a g(x_j).
/// Cohomology side: slots are S(V) tensor dual wedges in degree -1, basis
/// monomial degree D + p, and the differential inserts dual indices.
/// Differentials preserve D, so a truncation window never cuts a complex
/// mid-slot. Bases are ordered wedge-major, monomials lexicographic.
///
/// Instances are not thread-safe (they memoize symmetric/wedge powers);
/// use one per thread.
class TwistedKoszulComplex {
 public:
  TwistedKoszulComplex(Matrix g, ComplexSide side, long trunc);

  unsigned dim() const { return d_; }
  ComplexSide side() const { return side_; }
  long trunc() const { return trunc_; }
  long degree_low() const { return side_ == ComplexSide::Homology ? 0 : -static_cast<long>(d_); }

  size_t slot_dim(long p, long degree) const;
  /// Monomial degree of slot (p, D); negative means the slot is empty.
  long mono_degree(long p, long degree) const;

  /// Dense differential out of slot (p, D): homology maps to (p-1, D),
  /// cohomology to (p+1, D). The target slot may be empty (zero rows).
  Matrix differential_out(long p, long degree) const;

  /// Diagonal action of a commuting element h on slot (p, D): symmetric
  /// power on the monomial factor, wedge power of h (homology) or of the
  /// dual (h^-1)^T (cohomology) on the wedge factor.
  Matrix chain_action(const Matrix& h, long p, long degree);

  /// Trace of the chain action without materializing the matrix.
  Cyclotomic chain_action_trace(const Matrix& h, long p, long degree);

 private:
  struct Slot {
    size_t dim = 0;
    long mono_deg = -1;
    // sparse columns of the differential out of this slot
    std::vector<std::vector<std::pair<size_t, Cyclotomic>>> cols;
    size_t target_dim = 0;
  };

  void build_slot(long p, long degree);
  void verify_dd_zero() const;
  const Matrix& wedge_power(const Matrix& h, long p);
  size_t wedge_index(long p, const std::vector<int>& idx) const;

  Matrix g_;
  ComplexSide side_;
  long trunc_;
  unsigned d_;
  unsigned m_;
  detail::SymCache sym_;
  std::vector<std::vector<std::vector<int>>> wedges_;          // per p
  std::vector<std::map<std::vector<int>, size_t>> wedge_idx_;  // per p
  std::map<std::pair<long, long>, Slot> slots_;
  std::map<std::pair<std::string, long>, Matrix> wedge_cache_;
};

/// Homology dimensions of the twisted complex, no group averaging.
GradedDims koszul_dims(const Matrix& g, ComplexSide side, long trunc);

/// Graded dimensions of H(S(V), S(V)g)^{Z_g}: per slot the homology is
/// computed as kernel mod image, each h in zg induces an action on the
/// representatives, and the invariant dimension is the Reynolds trace
/// average. Every h must commute with g.
GradedDims koszul_invariant_dims(const Matrix& g, const std::vector<Matrix>& zg, ComplexSide side,
                                 long trunc);

/// Same dimensions via the rank of the Reynolds projector on each homology
/// slot (kernel of pi - I); an independent finishing route used to
/// cross-check the trace averages.
GradedDims koszul_invariant_dims_projector(const Matrix& g, const std::vector<Matrix>& zg,
                                           ComplexSide side, long trunc);

/// Homology representatives of slot (n, D) and the induced matrix of each
/// element of zg on them.
struct SlotActions {
  size_t dim = 0;
  Matrix reps = Matrix(0, 0, 1);
  std::vector<Matrix> actions;  // one per element of zg, in order
};
SlotActions slot_homology_actions(const Matrix& g, const std::vector<Matrix>& zg, ComplexSide side,
                                  long trunc, long n, long degree);

/// Sum of koszul_invariant_dims over one representative per conjugacy class.
GradedDims class_decomposition_dims(const MatrixGroup& g, ComplexSide side, long trunc, int jobs = 1);

}  // namespace smashhom
