// Acceptance suite: the conformance bar of the engine. Each check prints one
// PASS/FAIL line; the binary exits nonzero if any check fails. Everything is
// exact integer arithmetic, so there are no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "smashhom/bar.hpp"
#include "smashhom/closedform.hpp"
#include "smashhom/group_file.hpp"
#include "smashhom/koszul.hpp"
#include "smashhom/report.hpp"

using namespace smashhom;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Check = std::function<void(Outcome&)>;

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

MatrixGroup catalog_group(const std::string& name) { return close_group_file(catalog_entry(name).file); }

long series_at(const PowerSeries& s, long e) {
  return s.has(e) ? s.at(e).get_num().get_si() : 0;
}

// 1. closed-form homology equals the Koszul oracle on n <= d, D in [0, 4]
void c1(Outcome& o) {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    SeriesTable hom = homology_series(g, 4);
    GradedDims oracle = class_decomposition_dims(g, ComplexSide::Homology, 4);
    for (size_t n = 0; n <= g.dim(); ++n)
      for (long deg = 0; deg <= 4; ++deg)
        expect(o, series_at(hom.rows[n], deg) == oracle.at(static_cast<long>(n), deg),
               e.file.name + " homology (" + std::to_string(n) + "," + std::to_string(deg) + ")");
  }
}

// 2. closed-form cohomology equals the Koszul oracle on D in [-d, 4]
void c2(Outcome& o) {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    SeriesTable coh = cohomology_series_direct(g, 4);
    GradedDims oracle = class_decomposition_dims(g, ComplexSide::Cohomology, 4);
    const long d = g.dim();
    for (size_t n = 0; n <= g.dim(); ++n)
      for (long deg = -d; deg <= 4; ++deg)
        expect(o, series_at(coh.rows[n], deg) == oracle.at(static_cast<long>(n), deg),
               e.file.name + " cohomology (" + std::to_string(n) + "," + std::to_string(deg) + ")");
  }
}

// 3. classes with no fixed vectors have 1-dimensional homology at (0,0) with
//    every centralizer element acting as the identity
void c3(Outcome& o) {
  bool any = false;
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    for (const ConjClass& cls : g.conjugacy_classes()) {
      const Matrix& rep = g.element(cls.rep);
      if (fixed_space(rep).dim() != 0) continue;
      any = true;
      GradedDims dims = koszul_dims(rep, ComplexSide::Homology, 4);
      expect(o, dims.dims == std::map<std::pair<long, long>, long>{{{0, 0}, 1}},
             e.file.name + " rep " + std::to_string(cls.rep) + " homology not k at (0,0)");
      std::vector<Matrix> zg;
      for (size_t hi : cls.centralizer) zg.push_back(g.element(hi));
      SlotActions acts = slot_homology_actions(rep, zg, ComplexSide::Homology, 4, 0, 0);
      expect(o, acts.dim == 1, e.file.name + " slot (0,0) dimension");
      for (const Matrix& a : acts.actions)
        expect(o, a.is_identity(), e.file.name + " centralizer action on (0,0) not trivial");
    }
  }
  expect(o, any, "no catalog class without fixed vectors");
}

// 4. for g = diag(zeta_n) on a line (n = 2, 3, 4) the oracle cohomology is
//    1-dimensional with g acting by zeta_n^-1
void c4(Outcome& o) {
  for (unsigned n : {2u, 3u, 4u}) {
    Matrix g(1, 1, n);
    g.set(0, 0, Cyclotomic::root(n));
    GradedDims dims = koszul_dims(g, ComplexSide::Cohomology, 4);
    expect(o, dims.dims == std::map<std::pair<long, long>, long>{{{1, -1}, 1}},
           "n=" + std::to_string(n) + " cohomology not 1-dimensional at (1,-1)");
    std::vector<Matrix> zg;
    for (unsigned k = 0; k < n; ++k) {
      Matrix h(1, 1, n);
      h.set(0, 0, Cyclotomic::root(n, k));
      zg.push_back(h);
    }
    SlotActions acts = slot_homology_actions(g, zg, ComplexSide::Cohomology, 4, 1, -1);
    expect(o, acts.dim == 1, "n=" + std::to_string(n) + " slot dimension");
    expect(o, acts.actions[1].at(0, 0) == Cyclotomic::root(n, -1),
           "n=" + std::to_string(n) + " action is not the inverse weight");
  }
}

// 5. twisted duality: H^n = t^-d H_{d-n}(det^-1 twist) for every catalog group
void c5(Outcome& o) {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    const long trunc = std::max<long>(8, g.dim());
    DualityReport r = duality_check(g, trunc);
    expect(o, r.twisted_all(), e.file.name + " twisted duality fails");
  }
}

// 6. untwisted duality matches exactly for the SL groups and fails with a
//    witness for the others
void c6(Outcome& o) {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    DualityReport r = duality_check(g, std::max<long>(8, g.dim()));
    expect(o, r.in_SL == e.expected_in_sl, e.file.name + " in_SL flag");
    expect(o, r.untwisted_all() == e.expected_in_sl, e.file.name + " untwisted verdict");
    if (!e.expected_in_sl)
      expect(o, r.first_untwisted_mismatch.has_value(), e.file.name + " missing mismatch witness");
  }
}

// 7. the sign action tables
void c7(Outcome& o) {
  MatrixGroup g = catalog_group("c2-line");
  SeriesTable hom = homology_series(g, 4);
  SeriesTable coh = cohomology_series_direct(g, 4);
  auto eq = [&](const PowerSeries& s, std::vector<long> want, const std::string& what) {
    for (long deg = 0; deg <= 4; ++deg)
      expect(o, series_at(s, deg) == want[static_cast<size_t>(deg)],
             what + " at degree " + std::to_string(deg));
  };
  eq(hom.rows[0], {2, 0, 1, 0, 1}, "H_0");
  eq(hom.rows[1], {0, 0, 1, 0, 1}, "H_1");
  eq(coh.rows[0], {1, 0, 1, 0, 1}, "H^0");
  eq(coh.rows[1], {1, 0, 1, 0, 1}, "H^1");
}

// 8. SL(2) subgroups: H_2 is the invariant ring (in wedge degree 2) and H_0
//    adds one unit per nontrivial class
void c8(Outcome& o) {
  for (const char* name : {"q8", "c4-diag"}) {
    MatrixGroup g = catalog_group(name);
    const long trunc = 8;
    PowerSeries molien = invariant_molien(g, trunc);
    SeriesTable hom = homology_series(g, trunc);
    const long classes = static_cast<long>(g.conjugacy_classes().size());
    for (long deg = 0; deg <= trunc; ++deg) {
      expect(o, series_at(hom.rows[2], deg) == (deg >= 2 ? series_at(molien, deg - 2) : 0),
             std::string(name) + " H_2 vs Molien at " + std::to_string(deg));
      const long extra = deg == 0 ? classes - 1 : 0;
      expect(o, series_at(hom.rows[0], deg) == series_at(molien, deg) + extra,
             std::string(name) + " H_0 vs Molien at " + std::to_string(deg));
    }
  }
}

// 9. classes outside SL contribute the zero series to cohomology
void c9(Outcome& o) {
  MatrixGroup g = catalog_group("s3-sumzero");
  DetCharacter dc = determinant_character(g);
  SeriesTable coh = cohomology_series_direct(g, 6, SeriesOptions{.per_class = true});
  auto classes = g.conjugacy_classes();
  bool any = false;
  for (const ClassSeries& cs : *coh.per_class) {
    if (dc.det[classes[cs.class_index].rep].is_one()) continue;
    any = true;
    for (const PowerSeries& row : cs.rows)
      for (long deg = row.offset(); deg <= row.trunc(); ++deg)
        expect(o, row.at(deg) == 0,
               "class " + std::to_string(cs.class_index) + " contributes at degree " +
                   std::to_string(deg));
  }
  expect(o, any, "no class with det != 1");
}

// 10. the normalized bar complex reproduces the class decomposition
void c10(Outcome& o) {
  for (const char* name : {"c2-line", "trivial-1"}) {
    MatrixGroup g = catalog_group(name);
    GradedDims bar = bar_dims(g, 2, 3);
    GradedDims cls = class_decomposition_dims(g, ComplexSide::Homology, 3);
    for (long n = 0; n <= 2; ++n)
      for (long deg = 0; deg <= 3; ++deg)
        expect(o, bar.at(n, deg) == cls.at(n, deg),
               std::string(name) + " bar (" + std::to_string(n) + "," + std::to_string(deg) + ")");
  }
}

// 11. structural properties: Molien integrality, orbit-stabilizer counts,
//     Reynolds idempotence, d.d = 0, the per-class route shift
void c11(Outcome& o) {
  for (const CatalogEntry& e : catalog()) {
    MatrixGroup g = close_group_file(e.file);
    // integrality and nonnegativity are asserted inside invariant_molien
    try {
      PowerSeries molien = invariant_molien(g, 6);
      for (long deg = 0; deg <= 6; ++deg) expect(o, molien.at(deg) >= 0, e.file.name + " molien");
    } catch (const Error& err) {
      expect(o, false, e.file.name + std::string(": ") + err.what());
    }
    auto classes = g.conjugacy_classes();
    for (const ConjClass& cls : classes) {
      expect(o, cls.members.size() * cls.centralizer.size() == g.size(),
             e.file.name + " orbit-stabilizer");
      const Matrix& rep = g.element(cls.rep);
      Matrix pi = reynolds_projector(rep);
      expect(o, pi * pi == pi, e.file.name + " Reynolds idempotence");
      expect(o, rep * pi == pi, e.file.name + " Reynolds absorbs g");
    }
    // building the complexes runs the d.d = 0 assertion
    try {
      TwistedKoszulComplex(g.element(classes.back().rep), ComplexSide::Homology, 2);
      TwistedKoszulComplex(g.element(classes.back().rep), ComplexSide::Cohomology, 2);
    } catch (const Error& err) {
      expect(o, false, e.file.name + std::string(": ") + err.what());
    }
    // duality shift between the two cohomology routes, class by class
    SeriesOptions opts{.per_class = true};
    SeriesTable direct = cohomology_series_direct(g, 6, opts);
    SeriesTable dual = cohomology_series_via_duality(g, 6, opts);
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      const long kg = static_cast<long>(fixed_space(g.element(classes[ci].rep)).dim());
      for (size_t n = 0; n <= g.dim(); ++n)
        expect(o, (*dual.per_class)[ci].rows[n] == (*direct.per_class)[ci].rows[n].shifted(kg),
               e.file.name + " route shift class " + std::to_string(ci));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"homology closed form = Koszul oracle (all catalog groups, D <= 4)", c1},
      {"cohomology closed form = Koszul oracle (all catalog groups, D in [-d, 4])", c2},
      {"fixed-point-free classes: homology is k at (0,0) with trivial action", c3},
      {"diag(zeta_n) on a line: H^1 is k with g acting by zeta_n^-1 (n = 2,3,4)", c4},
      {"twisted duality H^n = t^-d H_{d-n}(det twist) on all catalog groups", c5},
      {"untwisted duality holds exactly for the SL catalog entries", c6},
      {"sign-action tables: H = [2,0,1,0,1],[0,0,1,0,1]; H^ = [1,0,1,0,1] twice", c7},
      {"SL(2) entries: H_2 = invariant ring, H_0 = invariants + nontrivial classes", c8},
      {"s3-sumzero: det != 1 classes contribute zero cohomology", c9},
      {"bar complex = class decomposition (c2-line, trivial-1; n <= 2, D <= 3)", c10},
      {"structural suite: integrality, orbit-stabilizer, Reynolds, d.d=0, route shift", c11},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      criteria[i].second(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(stop - start).count();
    std::ostringstream line;
    line << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first
         << "  (" << secs << "s)";
    if (!outcome.ok) line << "\n      " << outcome.detail;
    std::cout << line.str() << "\n";
    if (!outcome.ok) ++failures;
  }
  if (failures > 0) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
