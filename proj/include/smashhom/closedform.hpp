#pragma once

#include "smashhom/group.hpp"
#include "smashhom/rational_function.hpp"
#include "smashhom/series_table.hpp"

namespace smashhom {

/// Options shared by the series computations. jobs > 1 fans the per-class
/// work out to threads; results are merged in class order, so the output is
/// identical to a single-threaded run.
struct SeriesOptions {
  bool per_class = false;
  int jobs = 1;
  std::string group_tag;
};

/// Poincare series of the Hochschild homology of S(V)#G: per conjugacy class
/// the Molien-style centralizer average of the wedge-trace over the fixed
/// space, truncated to internal degree N.
SeriesTable homology_series(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts = {});

/// Same average with every summand twisted by det(h)^-1 on the full space.
SeriesTable twisted_homology_series(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts = {});

/// Cohomology by the direct formula: class g contributes at degree
/// n = d_g + p with the dual wedge trace over V^g and the det^-1 twist of the
/// moving space. Internal degrees run down to -n.
SeriesTable cohomology_series_direct(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts = {});

/// Cohomology through the dualizing-bimodule route; per class this equals
/// t^{dim V^g} times the direct route, which the tests assert.
SeriesTable cohomology_series_via_duality(const MatrixGroup& g, long n_trunc,
                                          const SeriesOptions& opts = {});

/// Hilbert series of the invariant ring S(V)^G (the classical group average
/// of 1/det(I - t g)).
PowerSeries invariant_molien(const MatrixGroup& g, long n_trunc);

/// The same series as a reduced rational function, summed over a common
/// denominator.
RationalFunction invariant_molien_closed(const MatrixGroup& g);

/// Closed rational forms of the homology rows (numerators carry the t^n
/// wedge shift).
std::vector<RationalFunction> homology_rows_closed(const MatrixGroup& g);

/// Checks cohomology row n against t^{-d} times (twisted) homology row d-n
/// on the common truncation window. Requires n_trunc >= d.
DualityReport duality_check(const MatrixGroup& g, long n_trunc, const SeriesOptions& opts = {});

}  // namespace smashhom
