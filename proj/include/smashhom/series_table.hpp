#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashhom/power_series.hpp"

namespace smashhom {

enum class SeriesSide { Homology, Cohomology, TwistedHomology };

std::string series_side_name(SeriesSide side);

/// Graded dimension series of one conjugacy class, rows indexed by
/// homological degree.
struct ClassSeries {
  size_t class_index = 0;  // position in conjugacy_classes()
  size_t rep = 0;          // element index of the representative
  std::vector<PowerSeries> rows;
};

/// Poincare series of H_n / H^n for n in [0, d]. Homology rows have offset 0;
/// cohomology row n has offset -n (dual exterior generators sit in internal
/// degree -1). All coefficients are dimensions: nonnegative integers.
struct SeriesTable {
  std::string group_tag;
  SeriesSide side = SeriesSide::Homology;
  long trunc = 0;
  std::vector<PowerSeries> rows;
  std::optional<std::vector<ClassSeries>> per_class;
};

struct DualityMismatch {
  size_t n = 0;
  long degree = 0;
  Rational lhs, rhs;
};

/// Outcome of comparing cohomology against shifted (twisted) homology.
/// twisted_match must be all-true; untwisted_match is all-true exactly for
/// groups inside SL(V).
struct DualityReport {
  std::string group_tag;
  unsigned d = 0;
  bool in_SL = false;
  std::vector<bool> twisted_match, untwisted_match;
  std::optional<DualityMismatch> first_twisted_mismatch, first_untwisted_mismatch;

  bool twisted_all() const {
    for (bool b : twisted_match)
      if (!b) return false;
    return true;
  }
  bool untwisted_all() const {
    for (bool b : untwisted_match)
      if (!b) return false;
    return true;
  }
};

}  // namespace smashhom
