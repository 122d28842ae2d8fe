#pragma once

#include <string>
#include <utility>

#include "smashhom/polynomial.hpp"

namespace smashhom {

/// Quotient of rational polynomials, kept reduced: gcd(num, den) = 1 and the
/// denominator is monic (so in particular its leading coefficient is positive).
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial<Rational>::zero()), den_(Polynomial<Rational>::constant(1)) {}

  RationalFunction(Polynomial<Rational> num, Polynomial<Rational> den) {
    if (den.is_zero()) throw ZeroInverseError("rational function with zero denominator");
    Polynomial<Rational> g = Polynomial<Rational>::gcd(num, den);
    if (g.degree() > 0) {
      num = Polynomial<Rational>::divexact(num, g);
      den = Polynomial<Rational>::divexact(den, g);
    }
    const Rational lead = den.leading();
    num_ = (Rational(1) / lead) * num;
    den_ = (Rational(1) / lead) * den;
  }

  const Polynomial<Rational>& num() const { return num_; }
  const Polynomial<Rational>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroInverseError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial<Rational> num_, den_;
};

}  // namespace smashhom
