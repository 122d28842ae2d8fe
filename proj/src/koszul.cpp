#include "smashhom/koszul.hpp"

#include <algorithm>

#include "smashhom/parallel.hpp"

namespace smashhom {

namespace {

void enumerate_wedges(unsigned d, long p, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<long>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < static_cast<int>(d); ++i) {
    cur.push_back(i);
    enumerate_wedges(d, p, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TwistedKoszulComplex::TwistedKoszulComplex(Matrix g, ComplexSide side, long trunc)
    : g_(std::move(g)),
      side_(side),
      trunc_(trunc),
      d_(static_cast<unsigned>(g_.rows())),
      m_(g_.order()),
      sym_(d_, std::max<long>(
                   side == ComplexSide::Homology ? trunc : trunc + static_cast<long>(g_.rows()), 0)) {
  if (g_.rows() != g_.cols()) throw ShapeError("twisting element must be square");
  if (trunc_ < degree_low()) throw Error("truncation below the lowest internal degree");
  matrix_order(g_);  // asserts finite order (and hence invertibility)

  wedges_.resize(d_ + 1);
  wedge_idx_.resize(d_ + 1);
  for (long p = 0; p <= static_cast<long>(d_); ++p) {
    std::vector<int> cur;
    enumerate_wedges(d_, p, 0, cur, wedges_[p]);
    for (size_t i = 0; i < wedges_[p].size(); ++i) wedge_idx_[p].emplace(wedges_[p][i], i);
  }

  for (long deg = degree_low(); deg <= trunc_; ++deg)
    for (long p = 0; p <= static_cast<long>(d_); ++p) build_slot(p, deg);
  verify_dd_zero();
}

size_t TwistedKoszulComplex::wedge_index(long p, const std::vector<int>& idx) const {
  return wedge_idx_.at(p).at(idx);
}

long TwistedKoszulComplex::mono_degree(long p, long degree) const {
  if (p < 0 || p > static_cast<long>(d_)) return -1;
  const long deg = side_ == ComplexSide::Homology ? degree - p : degree + p;
  return deg >= 0 ? deg : -1;
}

size_t TwistedKoszulComplex::slot_dim(long p, long degree) const {
  auto it = slots_.find({p, degree});
  return it == slots_.end() ? 0 : it->second.dim;
}

void TwistedKoszulComplex::build_slot(long p, long degree) {
  const long mdeg = mono_degree(p, degree);
  if (mdeg < 0) return;
  Slot slot;
  slot.mono_deg = mdeg;
  const size_t nm = sym_.monomials(mdeg).size();
  const size_t nw = wedges_[p].size();
  slot.dim = nm * nw;
  if (slot.dim == 0) return;

  const long tp = side_ == ComplexSide::Homology ? p - 1 : p + 1;
  const long tdeg = mono_degree(tp, degree);
  const size_t tnm = tdeg >= 0 ? sym_.monomials(tdeg).size() : 0;
  slot.target_dim = tdeg >= 0 ? tnm * wedges_[tp].size() : 0;
  slot.cols.resize(slot.dim);

  if (slot.target_dim > 0) {
    for (size_t wj = 0; wj < nw; ++wj) {
      const std::vector<int>& J = wedges_[p][wj];
      for (size_t ai = 0; ai < nm; ++ai) {
        const std::vector<int>& alpha = sym_.monomials(mdeg)[ai];
        std::map<size_t, Cyclotomic> column;
        auto accumulate = [&](size_t twj, const std::vector<int>& exp, const Cyclotomic& coeff) {
          const size_t row = twj * tnm + sym_.mono_index(tdeg, exp);
          auto [it, fresh] = column.emplace(row, coeff);
          if (!fresh) it->second += coeff;
        };
        if (side_ == ComplexSide::Homology) {
          // d(a (x) x_J) = sum_r (-1)^r (x_{j_r} a - a g(x_{j_r})) (x) x_{J \ r}
          for (size_t r = 0; r < J.size(); ++r) {
            const int j = J[r];
            const Rational sgn = r % 2 == 0 ? 1 : -1;
            std::vector<int> sub = J;
            sub.erase(sub.begin() + static_cast<long>(r));
            const size_t twj = wedge_index(p - 1, sub);
            std::vector<int> exp = alpha;
            exp[j] += 1;
            accumulate(twj, exp, Cyclotomic::from_rational(m_, sgn));
            for (unsigned l = 0; l < d_; ++l) {
              const Cyclotomic& glj = g_.at(l, static_cast<size_t>(j));
              if (glj.is_zero()) continue;
              std::vector<int> exp2 = alpha;
              exp2[l] += 1;
              accumulate(twj, exp2, -glj.scaled(sgn));
            }
          }
        } else {
          // d(a (x) xi_J) = sum_{l not in J} (x_l a - a g(x_l)) (x) xi_l ^ xi_J
          for (unsigned l = 0; l < d_; ++l) {
            if (std::find(J.begin(), J.end(), static_cast<int>(l)) != J.end()) continue;
            size_t pos = 0;
            while (pos < J.size() && J[pos] < static_cast<int>(l)) ++pos;
            const Rational sgn = pos % 2 == 0 ? 1 : -1;
            std::vector<int> sup = J;
            sup.insert(sup.begin() + static_cast<long>(pos), static_cast<int>(l));
            const size_t twj = wedge_index(p + 1, sup);
            std::vector<int> exp = alpha;
            exp[l] += 1;
            accumulate(twj, exp, Cyclotomic::from_rational(m_, sgn));
            for (unsigned i = 0; i < d_; ++i) {
              const Cyclotomic& gil = g_.at(i, l);
              if (gil.is_zero()) continue;
              std::vector<int> exp2 = alpha;
              exp2[i] += 1;
              accumulate(twj, exp2, -gil.scaled(sgn));
            }
          }
        }
        auto& out = slot.cols[wj * nm + ai];
        for (auto& [row, coeff] : column)
          if (!coeff.is_zero()) out.emplace_back(row, std::move(coeff));
      }
    }
  }
  slots_.emplace(std::make_pair(p, degree), std::move(slot));
}

void TwistedKoszulComplex::verify_dd_zero() const {
  for (const auto& [key, slot] : slots_) {
    if (slot.target_dim == 0) continue;
    const long tp = side_ == ComplexSide::Homology ? key.first - 1 : key.first + 1;
    auto next = slots_.find({tp, key.second});
    if (next == slots_.end() || next->second.target_dim == 0) continue;
    const Slot& nslot = next->second;
    for (const auto& col : slot.cols) {
      std::map<size_t, Cyclotomic> acc;
      for (const auto& [row, coeff] : col) {
        for (const auto& [row2, coeff2] : nslot.cols[row]) {
          auto [it, fresh] = acc.emplace(row2, coeff * coeff2);
          if (!fresh) it->second += coeff * coeff2;
        }
      }
      for (const auto& [row2, v] : acc)
        if (!v.is_zero()) throw Error("Koszul differential does not square to zero");
    }
  }
}

Matrix TwistedKoszulComplex::differential_out(long p, long degree) const {
  auto it = slots_.find({p, degree});
  if (it == slots_.end()) return Matrix(0, 0, m_);
  const Slot& slot = it->second;
  Matrix out(slot.target_dim, slot.dim, m_);
  for (size_t c = 0; c < slot.cols.size(); ++c)
    for (const auto& [row, coeff] : slot.cols[c]) out.at(row, c) = coeff;
  return out;
}

const Matrix& TwistedKoszulComplex::wedge_power(const Matrix& h, long p) {
  const auto key = std::make_pair(h.key(), p);
  auto it = wedge_cache_.find(key);
  if (it != wedge_cache_.end()) return it->second;
  const auto& ws = wedges_[p];
  Matrix out(ws.size(), ws.size(), m_);
  for (size_t col = 0; col < ws.size(); ++col)
    for (size_t row = 0; row < ws.size(); ++row) {
      Matrix minor(static_cast<size_t>(p), static_cast<size_t>(p), m_);
      for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
          minor.at(a, b) = h.at(static_cast<size_t>(ws[row][a]), static_cast<size_t>(ws[col][b]));
      out.at(row, col) = minor.det();
    }
  return wedge_cache_.emplace(key, std::move(out)).first->second;
}

Matrix TwistedKoszulComplex::chain_action(const Matrix& h, long p, long degree) {
  const long mdeg = mono_degree(p, degree);
  if (mdeg < 0) return Matrix(0, 0, m_);
  const Matrix hw = side_ == ComplexSide::Homology ? h : h.inverse().transpose();
  const Matrix& w = wedge_power(hw, p);
  const Matrix& s = sym_.sym(h, mdeg);
  const size_t nm = sym_.monomials(mdeg).size();
  Matrix out(w.rows() * nm, w.cols() * nm, m_);
  for (size_t wk = 0; wk < w.rows(); ++wk)
    for (size_t wj = 0; wj < w.cols(); ++wj) {
      const Cyclotomic& wc = w.at(wk, wj);
      if (wc.is_zero()) continue;
      for (size_t b = 0; b < nm; ++b)
        for (size_t a = 0; a < nm; ++a) {
          const Cyclotomic& sc = s.at(b, a);
          if (sc.is_zero()) continue;
          out.at(wk * nm + b, wj * nm + a) = wc * sc;
        }
    }
  return out;
}

Cyclotomic TwistedKoszulComplex::chain_action_trace(const Matrix& h, long p, long degree) {
  const long mdeg = mono_degree(p, degree);
  if (mdeg < 0) return Cyclotomic::zero(m_);
  const Matrix hw = side_ == ComplexSide::Homology ? h : h.inverse().transpose();
  return wedge_power(hw, p).trace() * sym_.sym(h, mdeg).trace();
}

namespace {

struct SlotHomologyData {
  size_t dim = 0;
  Matrix image;  // basis of the image of the incoming differential
  Matrix reps;   // kernel columns completing the image to a basis of the kernel
  SlotHomologyData() : image(0, 0, 1), reps(0, 0, 1) {}
};

// Homology of every slot in one internal-degree strand.
std::map<long, SlotHomologyData> strand_homology(const TwistedKoszulComplex& cx, long degree) {
  const unsigned d = cx.dim();
  std::map<long, Matrix> douts;
  std::map<long, MatrixRref> rrefs;
  for (long p = 0; p <= static_cast<long>(d); ++p) {
    if (cx.slot_dim(p, degree) == 0) continue;
    douts.emplace(p, cx.differential_out(p, degree));
    rrefs.emplace(p, douts.at(p).rref());
  }
  std::map<long, SlotHomologyData> out;
  for (long p = 0; p <= static_cast<long>(d); ++p) {
    const size_t dim = cx.slot_dim(p, degree);
    if (dim == 0) continue;
    SlotHomologyData data;
    Matrix kernel = Matrix::kernel_from_rref(rrefs.at(p), dim, douts.at(p).order());
    const long in = cx.side() == ComplexSide::Homology ? p + 1 : p - 1;
    if (douts.count(in) && rrefs.at(in).rank > 0)
      data.image = douts.at(in).select_columns(rrefs.at(in).pivots);
    else
      data.image = Matrix(dim, 0, kernel.order());
    // Kernel columns extending the image to a basis of the kernel.
    MatrixRref rb = Matrix::hstack(data.image, kernel).rref();
    std::vector<size_t> take;
    for (size_t piv : rb.pivots)
      if (piv >= data.image.cols()) take.push_back(piv - data.image.cols());
    data.reps = kernel.select_columns(take);
    data.dim = data.reps.cols();
    if (data.dim + data.image.cols() != kernel.cols())
      throw Error("image does not sit inside the kernel");
    out.emplace(p, std::move(data));
  }
  return out;
}

// Induced matrices of all zg elements on the homology of slot (p, D),
// solved against [image | reps] in one batched elimination.
std::vector<Matrix> induced_actions(TwistedKoszulComplex& cx, const std::vector<Matrix>& zg, long p,
                                    long degree, const SlotHomologyData& data) {
  const unsigned m = data.reps.order();
  Matrix rhs(data.reps.rows(), zg.size() * data.dim, m);
  for (size_t hi = 0; hi < zg.size(); ++hi) {
    Matrix moved = cx.chain_action(zg[hi], p, degree) * data.reps;
    for (size_t i = 0; i < moved.rows(); ++i)
      for (size_t j = 0; j < data.dim; ++j) rhs.at(i, hi * data.dim + j) = moved.at(i, j);
  }
  Matrix sol = Matrix::solve_columns(Matrix::hstack(data.image, data.reps), rhs);
  std::vector<Matrix> out;
  out.reserve(zg.size());
  for (size_t hi = 0; hi < zg.size(); ++hi) {
    Matrix induced(data.dim, data.dim, m);
    for (size_t i = 0; i < data.dim; ++i)
      for (size_t j = 0; j < data.dim; ++j)
        induced.at(i, j) = sol.at(data.image.cols() + i, hi * data.dim + j);
    out.push_back(std::move(induced));
  }
  return out;
}

void check_centralizer(const Matrix& g, const std::vector<Matrix>& zg) {
  for (const Matrix& h : zg)
    if (!(h * g == g * h)) throw NotInCentralizerError("element does not commute with the twist");
}

std::vector<long> strand_degrees(ComplexSide side, unsigned d, long trunc) {
  std::vector<long> out;
  const long low = side == ComplexSide::Homology ? 0 : -static_cast<long>(d);
  for (long deg = low; deg <= trunc; ++deg) out.push_back(deg);
  return out;
}

GradedDims invariant_dims_impl(const Matrix& g, const std::vector<Matrix>& zg, ComplexSide side,
                               long trunc, bool via_projector) {
  if (zg.empty()) throw Error("centralizer list is empty");
  check_centralizer(g, zg);
  TwistedKoszulComplex cx(g, side, trunc);
  GradedDims out;
  const Rational scale(1, static_cast<unsigned long>(zg.size()));
  for (long degree : strand_degrees(side, cx.dim(), trunc)) {
    auto strand = strand_homology(cx, degree);
    for (auto& [p, data] : strand) {
      if (data.dim == 0) continue;
      // Zero differentials (e.g. the identity class) make the homology the
      // whole slot with reps the standard basis; the induced action is the
      // chain action itself and only its trace is needed.
      if (!via_projector && data.image.cols() == 0 && data.dim == cx.slot_dim(p, degree)) {
        Cyclotomic tr = Cyclotomic::zero(g.order());
        for (const Matrix& h : zg) tr += cx.chain_action_trace(h, p, degree);
        Rational v = tr.as_rational() * scale;
        if (!is_integer(v) || v < 0)
          throw NonIntegralInvariantDimError("invariant dimension " + v.get_str() + " at (n=" +
                                             std::to_string(p) + ", D=" + std::to_string(degree) + ")");
        out.add(p, degree, static_cast<long>(v.get_num().get_si()));
        continue;
      }
      std::vector<Matrix> actions = induced_actions(cx, zg, p, degree, data);
      if (via_projector) {
        Matrix pi(data.dim, data.dim, g.order());
        for (const Matrix& act : actions) pi = pi + act;
        pi = pi.scaled(scale);
        Matrix shifted = pi - Matrix::identity(data.dim, g.order());
        out.add(p, degree, static_cast<long>(data.dim - shifted.rank()));
      } else {
        Cyclotomic tr = Cyclotomic::zero(g.order());
        for (const Matrix& act : actions) tr += act.trace();
        Rational v = tr.as_rational() * scale;
        if (!is_integer(v) || v < 0)
          throw NonIntegralInvariantDimError("invariant dimension " + v.get_str() + " at (n=" +
                                             std::to_string(p) + ", D=" + std::to_string(degree) + ")");
        out.add(p, degree, static_cast<long>(v.get_num().get_si()));
      }
    }
  }
  return out;
}

}  // namespace

GradedDims koszul_dims(const Matrix& g, ComplexSide side, long trunc) {
  TwistedKoszulComplex cx(g, side, trunc);
  GradedDims out;
  for (long degree : strand_degrees(side, cx.dim(), trunc)) {
    auto strand = strand_homology(cx, degree);
    for (auto& [p, data] : strand) out.add(p, degree, static_cast<long>(data.dim));
  }
  return out;
}

GradedDims koszul_invariant_dims(const Matrix& g, const std::vector<Matrix>& zg, ComplexSide side,
                                 long trunc) {
  return invariant_dims_impl(g, zg, side, trunc, false);
}

GradedDims koszul_invariant_dims_projector(const Matrix& g, const std::vector<Matrix>& zg,
                                           ComplexSide side, long trunc) {
  return invariant_dims_impl(g, zg, side, trunc, true);
}

SlotActions slot_homology_actions(const Matrix& g, const std::vector<Matrix>& zg, ComplexSide side,
                                  long trunc, long n, long degree) {
  check_centralizer(g, zg);
  TwistedKoszulComplex cx(g, side, trunc);
  auto strand = strand_homology(cx, degree);
  SlotActions out;
  auto it = strand.find(n);
  if (it == strand.end()) return out;
  out.dim = it->second.dim;
  out.reps = it->second.reps;
  out.actions = induced_actions(cx, zg, n, degree, it->second);
  return out;
}

GradedDims class_decomposition_dims(const MatrixGroup& g, ComplexSide side, long trunc, int jobs) {
  const std::vector<ConjClass> classes = g.conjugacy_classes();
  std::vector<GradedDims> parts(classes.size());
  detail::run_jobs(classes.size(), jobs, [&](size_t ci) {
    std::vector<Matrix> zg;
    zg.reserve(classes[ci].centralizer.size());
    for (size_t hi : classes[ci].centralizer) zg.push_back(g.element(hi));
    parts[ci] = koszul_invariant_dims(g.element(classes[ci].rep), zg, side, trunc);
  });
  GradedDims out;
  for (const GradedDims& part : parts)
    for (const auto& [key, v] : part.dims) out.add(key.first, key.second, v);
  return out;
}

}  // namespace smashhom
