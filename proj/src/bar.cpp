#include "smashhom/bar.hpp"

#include <map>

#include "smashhom/monomials.hpp"

namespace smashhom {

namespace {

// A chain slot of the normalized bar complex. Tuples are encoded flat:
// factor i occupies a record [group index, exponents...] of length 1 + d.
// Factor 0 runs over all of B; factors >= 1 exclude 1#e (the unit of B).
struct BarSlot {
  std::vector<std::vector<int>> basis;
  std::map<std::vector<int>, size_t> index;
};

class BarComplex {
 public:
  BarComplex(const MatrixGroup& g, long n_max, long d_max, size_t slot_cap)
      : g_(g), d_(g.dim()), sym_(g.dim(), d_max), n_max_(n_max), d_max_(d_max), cap_(slot_cap) {
    for (long n = 0; n <= n_max_ + 1; ++n)
      for (long deg = 0; deg <= d_max_; ++deg) build_slot(n, deg);
  }

  const BarSlot& slot(long n, long deg) const { return slots_.at({n, deg}); }

  // Sparse differential d_n : C_n -> C_{n-1} at internal degree deg,
  // as columns over the source basis.
  std::vector<std::map<size_t, Cyclotomic>> differential(long n, long deg) {
    const BarSlot& src = slot(n, deg);
    const BarSlot& dst = slot(n - 1, deg);
    std::vector<std::map<size_t, Cyclotomic>> cols(src.basis.size());
    for (size_t c = 0; c < src.basis.size(); ++c) {
      const std::vector<int>& tup = src.basis[c];
      for (long face = 0; face <= n; ++face) {
        const Rational sgn = face % 2 == 0 ? 1 : -1;
        const long li = face < n ? face : n;      // left factor
        const long ri = face < n ? face + 1 : 0;  // right factor
        // terms of (x^a # g)(x^b # h) = x^a g(x^b) # gh
        const size_t gi = static_cast<size_t>(tup[li * rec_]);
        const size_t hi = static_cast<size_t>(tup[ri * rec_]);
        std::vector<int> aexp(tup.begin() + li * rec_ + 1, tup.begin() + (li + 1) * rec_);
        std::vector<int> bexp(tup.begin() + ri * rec_ + 1, tup.begin() + (ri + 1) * rec_);
        long bdeg = 0;
        for (int e : bexp) bdeg += e;
        const size_t prod_g = g_.mul(gi, hi);
        const Matrix& symg = sym_.sym(g_.element(gi), bdeg);
        const size_t bcol = sym_.mono_index(bdeg, bexp);
        for (size_t brow = 0; brow < sym_.monomials(bdeg).size(); ++brow) {
          const Cyclotomic& coeff = symg.at(brow, bcol);
          if (coeff.is_zero()) continue;
          std::vector<int> merged(1 + d_);
          merged[0] = static_cast<int>(prod_g);
          long mdeg = 0;
          for (unsigned k = 0; k < d_; ++k) {
            merged[1 + k] = aexp[k] + sym_.monomials(bdeg)[brow][k];
            mdeg += merged[1 + k];
          }
          // normalized complex: interior factors drop their unit component
          const bool interior = face >= 1 && face <= n - 1;
          if (interior && mdeg == 0 && prod_g == 0) continue;
          std::vector<int> target;
          target.reserve(dst.basis.empty() ? 0 : dst.basis[0].size());
          if (face < n) {
            for (long f = 0; f < face; ++f)
              target.insert(target.end(), tup.begin() + f * rec_, tup.begin() + (f + 1) * rec_);
            target.insert(target.end(), merged.begin(), merged.end());
            for (long f = face + 2; f <= n; ++f)
              target.insert(target.end(), tup.begin() + f * rec_, tup.begin() + (f + 1) * rec_);
          } else {
            target.insert(target.end(), merged.begin(), merged.end());
            for (long f = 1; f <= n - 1; ++f)
              target.insert(target.end(), tup.begin() + f * rec_, tup.begin() + (f + 1) * rec_);
          }
          const size_t row = dst.index.at(target);
          auto [it, fresh] = cols[c].emplace(row, coeff.scaled(sgn));
          if (!fresh) it->second += coeff.scaled(sgn);
        }
      }
    }
    return cols;
  }

 private:
  void build_slot(long n, long deg) {
    BarSlot slot;
    std::vector<int> tup;
    fill(slot, tup, 0, n, deg);
    if (slot.basis.size() > cap_)
      throw SlotTooLargeError("bar slot (n=" + std::to_string(n) + ", D=" + std::to_string(deg) +
                              ") has " + std::to_string(slot.basis.size()) + " basis elements");
    for (size_t i = 0; i < slot.basis.size(); ++i) slot.index.emplace(slot.basis[i], i);
    slots_.emplace(std::make_pair(n, deg), std::move(slot));
  }

  // Append factor `pos` of degrees summing to `left`, positions pos..n.
  void fill(BarSlot& slot, std::vector<int>& tup, long pos, long n, long left) {
    if (pos > n) {
      if (left == 0) slot.basis.push_back(tup);
      return;
    }
    for (long deg = 0; deg <= left; ++deg) {
      for (const std::vector<int>& mono : sym_.monomials(deg)) {
        for (size_t gi = 0; gi < g_.size(); ++gi) {
          if (pos >= 1 && deg == 0 && gi == 0) continue;  // unit is quotiented away
          tup.push_back(static_cast<int>(gi));
          tup.insert(tup.end(), mono.begin(), mono.end());
          fill(slot, tup, pos + 1, n, left - deg);
          tup.resize(tup.size() - (1 + d_));
        }
      }
    }
  }

  const MatrixGroup& g_;
  unsigned d_;
  detail::SymCache sym_;
  long n_max_, d_max_;
  size_t cap_;
  const long rec_ = static_cast<long>(d_) + 1;
  std::map<std::pair<long, long>, BarSlot> slots_;
};

Matrix dense_from_columns(const std::vector<std::map<size_t, Cyclotomic>>& cols, size_t rows,
                          unsigned order) {
  Matrix out(rows, cols.size(), order);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) out.at(r, c) = v;
  return out;
}

}  // namespace

GradedDims bar_dims(const MatrixGroup& g, long n_max, long d_max, size_t slot_cap) {
  if (n_max < 0 || d_max < 0) throw Error("bar window must be nonnegative");
  BarComplex cx(g, n_max, d_max, slot_cap);
  const unsigned m = g.field_order();
  GradedDims out;
  for (long deg = 0; deg <= d_max; ++deg) {
    std::vector<size_t> ranks(n_max + 2, 0);  // rank of d_n at this degree
    std::vector<size_t> dims(n_max + 2, 0);
    for (long n = 0; n <= n_max + 1; ++n) dims[n] = cx.slot(n, deg).basis.size();
    for (long n = 1; n <= n_max + 1; ++n) {
      if (dims[n] == 0) continue;
      Matrix dmat = dense_from_columns(cx.differential(n, deg), cx.slot(n - 1, deg).basis.size(), m);
      ranks[n] = dmat.rank();
    }
    for (long n = 0; n <= n_max; ++n) {
      const long kernel = static_cast<long>(dims[n]) - static_cast<long>(n == 0 ? 0 : ranks[n]);
      out.add(n, deg, kernel - static_cast<long>(ranks[n + 1]));
    }
  }
  return out;
}

}  // namespace smashhom
