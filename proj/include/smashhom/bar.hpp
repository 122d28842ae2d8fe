#pragma once

#include "smashhom/group.hpp"
#include "smashhom/koszul.hpp"

namespace smashhom {

/// Hochschild homology dimensions of B = S(V)#G from the normalized bar
/// complex C_n = B (x) (B/k)^(x)n, graded with G in degree 0 and V in
/// degree 1, for n <= n_max and internal degree D <= d_max. This assumes
/// nothing about the conjugacy-class decomposition, so it cross-checks it.
///
/// Throws SlotTooLargeError when some chain slot would exceed slot_cap basis
/// elements.
GradedDims bar_dims(const MatrixGroup& g, long n_max, long d_max, size_t slot_cap = 20000);

}  // namespace smashhom
