#include "smashhom/closedform.hpp"

#include "smashhom/parallel.hpp"

namespace smashhom {

std::string series_side_name(SeriesSide side) {
  switch (side) {
    case SeriesSide::Homology: return "homology";
    case SeriesSide::Cohomology: return "cohomology";
    case SeriesSide::TwistedHomology: return "twisted-homology";
  }
  return "?";
}

namespace {

// Truncated inverse of sum p[i] t^i with p[0] a unit, to len coefficients.
std::vector<Cyclotomic> inverse_series_cyc(const std::vector<Cyclotomic>& p, size_t len) {
  const unsigned m = p[0].order();
  std::vector<Cyclotomic> inv(len, Cyclotomic::zero(m));
  const Cyclotomic lead_inv = p[0].inverse();
  inv[0] = lead_inv;
  for (size_t k = 1; k < len; ++k) {
    Cyclotomic acc = Cyclotomic::zero(m);
    const size_t jmax = k < p.size() - 1 ? k : p.size() - 1;
    for (size_t j = 1; j <= jmax; ++j)
      if (!p[j].is_zero()) acc += p[j] * inv[k - j];
    inv[k] = -(acc * lead_inv);
  }
  return inv;
}

// det(I - t M) from the wedge traces of M.
std::vector<Cyclotomic> det_one_minus_t(const std::vector<Cyclotomic>& e) {
  std::vector<Cyclotomic> den = e;
  for (size_t i = 1; i < den.size(); i += 2) den[i] = -den[i];
  return den;
}

struct ElementKernel {
  std::vector<Cyclotomic> efix;   // wedge traces of h restricted to V^g
  std::vector<Cyclotomic> edual;  // wedge traces of the inverse restriction
  Cyclotomic det_mov_inv;         // det(h on V_g)^-1
  Cyclotomic det_full_inv;        // det(h)^-1
  std::vector<Cyclotomic> inv;    // 1/det(I - t h|V^g), len coefficients
};

struct ClassKernel {
  size_t class_index = 0;
  size_t rep = 0;
  size_t kg = 0;  // dim V^g
  size_t dg = 0;  // dim V_g
  size_t zsize = 0;
  std::vector<ElementKernel> elems;
};

ClassKernel build_class_kernel(const MatrixGroup& g, const std::vector<ConjClass>& classes, size_t ci,
                               size_t len) {
  const ConjClass& cls = classes[ci];
  const Matrix& rep = g.element(cls.rep);
  Subspace vfix = fixed_space(rep);
  Subspace vmov = moving_space(rep);
  ClassKernel out;
  out.class_index = ci;
  out.rep = cls.rep;
  out.kg = vfix.dim();
  out.dg = vmov.dim();
  out.zsize = cls.centralizer.size();
  if (out.kg + out.dg != g.dim()) throw Error("fixed/moving spaces do not fill V");
  out.elems.reserve(out.zsize);
  for (size_t hi : cls.centralizer) {
    const Matrix& h = g.element(hi);
    Matrix hf = h.restrict_to(vfix.basis);
    Matrix hm = h.restrict_to(vmov.basis);
    ElementKernel ek;
    ek.efix = hf.exterior_traces();
    ek.edual = hf.inverse().exterior_traces();
    ek.det_mov_inv = hm.det().inverse();
    ek.det_full_inv = h.det().inverse();
    ek.inv = inverse_series_cyc(det_one_minus_t(ek.efix), len);
    out.elems.push_back(std::move(ek));
  }
  return out;
}

// Average over the centralizer and check the result is a dimension series.
std::vector<Rational> average_dims(const std::vector<Cyclotomic>& acc, size_t zsize) {
  const Rational scale(1, static_cast<unsigned long>(zsize));
  std::vector<Rational> dims;
  dims.reserve(acc.size());
  for (const Cyclotomic& c : acc) {
    Rational v = c.as_rational() * scale;
    if (!is_integer(v))
      throw NonIntegralInvariantDimError("non-integral invariant dimension " + v.get_str());
    if (v < 0) throw NegativeDimensionError("negative dimension " + v.get_str());
    dims.push_back(std::move(v));
  }
  return dims;
}

enum class Kind { Hom, TwistedHom, CohDirect, CohDuality };

std::vector<PowerSeries> assemble_class_rows(const ClassKernel& k, Kind kind, long n_trunc, unsigned d) {
  const bool homological = kind == Kind::Hom || kind == Kind::TwistedHom;
  const size_t len = k.elems.empty() ? 1 : k.elems[0].inv.size();
  const unsigned m = k.elems[0].efix[0].order();

  std::vector<PowerSeries> rows;
  rows.reserve(d + 1);
  for (size_t n = 0; n <= d; ++n) {
    const long offset = homological ? 0 : -static_cast<long>(n);
    PowerSeries row(offset, n_trunc);

    bool contributes;
    size_t wedge_idx;  // which wedge trace enters the average
    long shift;        // monomial shift of the class series
    if (homological) {
      contributes = n <= k.kg;
      wedge_idx = n;
      shift = static_cast<long>(n);
    } else {
      contributes = n >= k.dg && n - k.dg <= k.kg;
      if (kind == Kind::CohDirect) {
        wedge_idx = n - k.dg;                    // p, on the dual side
        shift = -static_cast<long>(n);
      } else {
        wedge_idx = d - n;                       // exterior duality partner
        shift = static_cast<long>(k.kg) - static_cast<long>(n);
      }
    }
    if (contributes) {
      std::vector<Cyclotomic> acc(len, Cyclotomic::zero(m));
      for (const ElementKernel& ek : k.elems) {
        Cyclotomic factor = kind == Kind::Hom          ? ek.efix[wedge_idx]
                            : kind == Kind::TwistedHom ? ek.efix[wedge_idx] * ek.det_full_inv
                            : kind == Kind::CohDirect  ? ek.edual[wedge_idx] * ek.det_mov_inv
                                                       : ek.efix[wedge_idx] * ek.det_full_inv;
        if (factor.is_zero()) continue;
        for (size_t i = 0; i < len; ++i)
          if (!ek.inv[i].is_zero()) acc[i] += factor * ek.inv[i];
      }
      std::vector<Rational> dims = average_dims(acc, k.zsize);
      for (long e = std::max(offset, shift); e <= n_trunc; ++e) {
        const size_t idx = static_cast<size_t>(e - shift);
        if (idx < dims.size()) row.at(e) = dims[idx];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SeriesTable series_table(const MatrixGroup& g, long n_trunc, Kind kind, const SeriesOptions& opts) {
  if (n_trunc < 0) throw Error("truncation must be nonnegative");
  const unsigned d = g.dim();
  const size_t len = static_cast<size_t>(n_trunc) + d + 1;
  const std::vector<ConjClass> classes = g.conjugacy_classes();

  std::vector<std::vector<PowerSeries>> per_class_rows(classes.size());
  detail::run_jobs(classes.size(), opts.jobs, [&](size_t ci) {
    ClassKernel k = build_class_kernel(g, classes, ci, len);
    per_class_rows[ci] = assemble_class_rows(k, kind, n_trunc, d);
  });

  SeriesTable out;
  out.group_tag = opts.group_tag;
  out.side = kind == Kind::Hom          ? SeriesSide::Homology
             : kind == Kind::TwistedHom ? SeriesSide::TwistedHomology
                                        : SeriesSide::Cohomology;
  out.trunc = n_trunc;
  out.rows = per_class_rows[0];
  for (size_t ci = 1; ci < classes.size(); ++ci)
    for (size_t n = 0; n <= d; ++n) out.rows[n] = out.rows[n] + per_class_rows[ci][n];
  if (opts.per_class) {
    std::vector<ClassSeries> breakdown;
    for (size_t ci = 0; ci < classes.size(); ++ci)
      breakdown.push_back(ClassSeries{ci, classes[ci].rep, per_class_rows[ci]});
    out.per_class = std::move(breakdown);
  }
  return out;
}

}  // namespace

SeriesTable homology_series(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts) {
  return series_table(g, n_trunc, Kind::Hom, opts);
}

SeriesTable twisted_homology_series(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts) {
  return series_table(g, n_trunc, Kind::TwistedHom, opts);
}

SeriesTable cohomology_series_direct(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts) {
  return series_table(g, n_trunc, Kind::CohDirect, opts);
}

SeriesTable cohomology_series_via_duality(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts) {
  return series_table(g, n_trunc, Kind::CohDuality, opts);
}

PowerSeries invariant_molien(const MatrixGroup& g, long n_trunc) {
  if (n_trunc < 0) throw Error("truncation must be nonnegative");
  const size_t len = static_cast<size_t>(n_trunc) + 1;
  std::vector<Cyclotomic> acc(len, Cyclotomic::zero(g.field_order()));
  for (size_t i = 0; i < g.size(); ++i) {
    std::vector<Cyclotomic> inv = inverse_series_cyc(det_one_minus_t(g.element(i).exterior_traces()), len);
    for (size_t k = 0; k < len; ++k) acc[k] += inv[k];
  }
  return PowerSeries(0, average_dims(acc, g.size()));
}

namespace {

// Running sum of cyclotomic rational functions, gcd-reduced at every step.
struct CycFrac {
  Polynomial<Cyclotomic> num, den;
};

void frac_add(CycFrac& acc, const Polynomial<Cyclotomic>& num, const Polynomial<Cyclotomic>& den) {
  if (acc.den.is_zero()) {
    acc.num = num;
    acc.den = den;
  } else {
    acc.num = acc.num * den + num * acc.den;
    acc.den = acc.den * den;
  }
  if (acc.num.is_zero()) {
    acc.den = Polynomial<Cyclotomic>::constant(ring_one_like(acc.den.leading()), acc.den.var());
    return;
  }
  Polynomial<Cyclotomic> g = Polynomial<Cyclotomic>::gcd(acc.num, acc.den);
  if (g.degree() > 0) {
    acc.num = Polynomial<Cyclotomic>::divexact(acc.num, g);
    acc.den = Polynomial<Cyclotomic>::divexact(acc.den, g);
  }
}

RationalFunction to_rational_function(CycFrac f, const Rational& scale) {
  const Cyclotomic lead_inv = f.den.leading().inverse();
  f.num = lead_inv * f.num;
  f.den = lead_inv * f.den;
  std::vector<Rational> num, den;
  for (const auto& c : f.num.coeffs()) num.push_back(c.as_rational() * scale);
  for (const auto& c : f.den.coeffs()) den.push_back(c.as_rational());
  return RationalFunction(Polynomial<Rational>(std::move(num), "t"), Polynomial<Rational>(std::move(den), "t"));
}

}  // namespace

RationalFunction invariant_molien_closed(const MatrixGroup& g) {
  const Cyclotomic one = Cyclotomic::one(g.field_order());
  CycFrac acc;
  for (size_t i = 0; i < g.size(); ++i) {
    Polynomial<Cyclotomic> den(det_one_minus_t(g.element(i).exterior_traces()), "t");
    frac_add(acc, Polynomial<Cyclotomic>::constant(one, "t"), den);
  }
  return to_rational_function(std::move(acc), Rational(1, static_cast<unsigned long>(g.size())));
}

std::vector<RationalFunction> homology_rows_closed(const MatrixGroup& g) {
  const unsigned d = g.dim();
  const unsigned m = g.field_order();
  const std::vector<ConjClass> classes = g.conjugacy_classes();
  std::vector<CycFrac> acc(d + 1);
  for (const ConjClass& cls : classes) {
    Subspace vfix = fixed_space(g.element(cls.rep));
    const Rational zinv(1, static_cast<unsigned long>(cls.centralizer.size()));
    for (size_t hi : cls.centralizer) {
      Matrix hf = g.element(hi).restrict_to(vfix.basis);
      std::vector<Cyclotomic> e = hf.exterior_traces();
      Polynomial<Cyclotomic> den(det_one_minus_t(e), "t");
      for (size_t n = 0; n < e.size(); ++n) {
        if (e[n].is_zero()) continue;
        // wedge factor in internal degree n: numerator e_n t^n, averaged.
        std::vector<Cyclotomic> num(n + 1, Cyclotomic::zero(m));
        num[n] = e[n].scaled(zinv);
        frac_add(acc[n], Polynomial<Cyclotomic>(std::move(num), "t"), den);
      }
    }
  }
  std::vector<RationalFunction> rows;
  for (size_t n = 0; n <= d; ++n) {
    if (acc[n].den.is_zero())
      rows.emplace_back();
    else
      rows.push_back(to_rational_function(std::move(acc[n]), Rational(1)));
  }
  return rows;
}

DualityReport duality_check(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts) {
  const unsigned d = g.dim();
  if (n_trunc < d) throw Error("duality check needs truncation >= dim V");

  SeriesTable coh = cohomology_series_direct(g, n_trunc, opts);
  SeriesTable hom = homology_series(g, n_trunc, opts);
  SeriesTable tw = twisted_homology_series(g, n_trunc, opts);

  DualityReport rep;
  rep.group_tag = opts.group_tag;
  rep.d = d;
  rep.in_SL = determinant_character(g).in_SL;
  rep.twisted_match.resize(d + 1, true);
  rep.untwisted_match.resize(d + 1, true);

  auto compare = [&](const SeriesTable& homology, std::vector<bool>& match,
                     std::optional<DualityMismatch>& first) {
    for (size_t n = 0; n <= d; ++n) {
      const PowerSeries& lhs = coh.rows[n];
      PowerSeries rhs = homology.rows[d - n].shifted(-static_cast<long>(d));
      const long lo = std::max(lhs.offset(), rhs.offset());
      const long hi = std::min(lhs.trunc(), rhs.trunc());
      for (long e = lo; e <= hi; ++e) {
        if (lhs.at(e) != rhs.at(e)) {
          match[n] = false;
          if (!first) first = DualityMismatch{n, e, lhs.at(e), rhs.at(e)};
          break;
        }
      }
    }
  };
  compare(tw, rep.twisted_match, rep.first_twisted_mismatch);
  compare(hom, rep.untwisted_match, rep.first_untwisted_mismatch);
  return rep;
}

}  // namespace smashhom
