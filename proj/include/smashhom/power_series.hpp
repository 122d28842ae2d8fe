#pragma once

#include <vector>

#include "smashhom/rational.hpp"
#include "smashhom/rational_function.hpp"

namespace smashhom {

/// Truncated Laurent series: exact coefficients for exponents in
/// [offset, trunc]. The offset may be negative. Exponents below the offset
/// are unrepresented, not implicitly zero; arithmetic and equality only act
/// on the range both operands represent.
class PowerSeries {
 public:
  PowerSeries(long offset, long trunc)
      : offset_(offset), trunc_(trunc), c_(check_size(offset, trunc), Rational(0)) {}
  PowerSeries(long offset, std::vector<Rational> coeffs)
      : offset_(offset), trunc_(offset + static_cast<long>(coeffs.size()) - 1), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("power series needs at least one coefficient");
  }

  long offset() const { return offset_; }
  long trunc() const { return trunc_; }

  const Rational& at(long e) const {
    if (e < offset_ || e > trunc_) throw Error("series exponent out of range");
    return c_[static_cast<size_t>(e - offset_)];
  }
  Rational& at(long e) {
    if (e < offset_ || e > trunc_) throw Error("series exponent out of range");
    return c_[static_cast<size_t>(e - offset_)];
  }
  bool has(long e) const { return e >= offset_ && e <= trunc_; }
  /// Coefficient if represented, default 0 otherwise. Only safe where the
  /// caller knows the series vanishes below its offset.
  Rational coeff_or_zero(long e) const { return has(e) ? at(e) : Rational(0); }

  const std::vector<Rational>& coeffs() const { return c_; }

  PowerSeries shifted(long k) const {
    PowerSeries r = *this;
    r.offset_ += k;
    r.trunc_ += k;
    return r;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    long off = a.offset_ > b.offset_ ? a.offset_ : b.offset_;
    long tr = a.trunc_ < b.trunc_ ? a.trunc_ : b.trunc_;
    if (tr < off) throw Error("series sum has empty valid range");
    PowerSeries r(off, tr);
    for (long e = off; e <= tr; ++e) r.at(e) = a.at(e) + b.at(e);
    return r;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    long off = a.offset_ > b.offset_ ? a.offset_ : b.offset_;
    long tr = a.trunc_ < b.trunc_ ? a.trunc_ : b.trunc_;
    if (tr < off) throw Error("series difference has empty valid range");
    PowerSeries r(off, tr);
    for (long e = off; e <= tr; ++e) r.at(e) = a.at(e) - b.at(e);
    return r;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    long off = a.offset_ + b.offset_;
    long tr = a.trunc_ + b.offset_ < b.trunc_ + a.offset_ ? a.trunc_ + b.offset_ : b.trunc_ + a.offset_;
    if (tr < off) throw Error("series product has empty valid range");
    PowerSeries r(off, tr);
    for (long i = a.offset_; i <= a.trunc_; ++i) {
      if (a.at(i) == 0) continue;
      for (long j = b.offset_; j <= b.trunc_; ++j) {
        long e = i + j;
        if (e < off || e > tr) continue;
        r.at(e) += a.at(i) * b.at(j);
      }
    }
    return r;
  }

  PowerSeries scaled(const Rational& s) const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Equality on the common valid range (vacuously true if the ranges are
  /// disjoint; callers that care check the overlap themselves).
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    long off = a.offset_ > b.offset_ ? a.offset_ : b.offset_;
    long tr = a.trunc_ < b.trunc_ ? a.trunc_ : b.trunc_;
    for (long e = off; e <= tr; ++e)
      if (a.at(e) != b.at(e)) return false;
    return true;
  }

 private:
  static size_t check_size(long offset, long trunc) {
    if (trunc < offset) throw Error("series truncation below offset");
    return static_cast<size_t>(trunc - offset + 1);
  }

  long offset_;
  long trunc_;
  std::vector<Rational> c_;
};

/// Exact Laurent expansion of f on [offset, trunc]. Throws PoleError when f
/// has a pole at 0 of order too high for the requested offset.
PowerSeries laurent_expand(const RationalFunction& f, long offset, long trunc);

}  // namespace smashhom
