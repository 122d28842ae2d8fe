#include "smashhom/power_series.hpp"

namespace smashhom {

namespace {

// Coefficients of 1/p mod t^{n}, requires p[0] != 0.
std::vector<Rational> inverse_series(const std::vector<Rational>& p, size_t n) {
  std::vector<Rational> inv(n, Rational(0));
  const Rational lead_inv = Rational(1) / p[0];
  inv[0] = lead_inv;
  for (size_t k = 1; k < n; ++k) {
    Rational acc(0);
    const size_t jmax = k < p.size() - 1 ? k : p.size() - 1;
    for (size_t j = 1; j <= jmax; ++j) acc += p[j] * inv[k - j];
    inv[k] = -acc * lead_inv;
  }
  return inv;
}

long valuation(const Polynomial<Rational>& p) {
  for (long i = 0; i <= p.degree(); ++i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;  // zero polynomial
}

}  // namespace

PowerSeries laurent_expand(const RationalFunction& f, long offset, long trunc) {
  if (trunc < offset) throw Error("laurent_expand: truncation below offset");
  if (f.is_zero()) return PowerSeries(offset, trunc);

  const long vnum = valuation(f.num());
  const long vden = valuation(f.den());
  const long val = vnum - vden;  // order of f at t = 0
  if (val < offset)
    throw PoleError("pole of order " + std::to_string(-val) + " at 0 not representable at offset " +
                    std::to_string(offset));

  // Strip the monomial content so the reduced denominator is a unit at 0.
  std::vector<Rational> num0(f.num().coeffs().begin() + vnum, f.num().coeffs().end());
  std::vector<Rational> den0(f.den().coeffs().begin() + vden, f.den().coeffs().end());

  const size_t len = static_cast<size_t>(trunc - val + 1);
  std::vector<Rational> inv = inverse_series(den0, len);
  PowerSeries out(offset, trunc);
  for (long e = val; e <= trunc; ++e) {
    Rational acc(0);
    const size_t k = static_cast<size_t>(e - val);
    const size_t jmax = k < num0.size() - 1 ? k : num0.size() - 1;
    for (size_t j = 0; j <= jmax; ++j) acc += num0[j] * inv[k - j];
    if (e >= offset) out.at(e) = acc;
  }
  return out;
}

}  // namespace smashhom
