#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smashhom/polynomial.hpp"
#include "smashhom/rational.hpp"

namespace smashhom {

/// Element of the cyclotomic field Q(zeta_m), stored on the power basis
/// 1, z, ..., z^{phi(m)-1} modulo the m-th cyclotomic polynomial. The
/// representation is always fully reduced, so equality is coefficient-wise.
///
/// The field order is fixed per value; combining values of different orders
/// throws OrderMismatchError rather than coercing.
class Cyclotomic {
 public:
  /// Zero of Q(zeta_1) = Q. Containers need this; library code always
  /// constructs with an explicit order.
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}

  static Cyclotomic zero(unsigned m);
  static Cyclotomic one(unsigned m);
  static Cyclotomic from_rational(unsigned m, const Rational& q);
  /// zeta_m^power, any integer power.
  static Cyclotomic root(unsigned m, long power = 1);
  /// From arbitrary power-basis coefficients c[k] (coefficient of z^k),
  /// reduced mod the cyclotomic polynomial.
  static Cyclotomic from_coeffs(unsigned m, const std::vector<Rational>& c);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  /// this -= a*b, the elimination kernel's inner operation.
  void submul(const Cyclotomic& a, const Cyclotomic& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// the minimal polynomial. Throws ZeroInverseError on zero.
  Cyclotomic inverse() const;

  Cyclotomic scaled(const Rational& s) const;

  /// The value as a rational if all higher power-basis coefficients vanish;
  /// otherwise throws NotRationalError.
  Rational as_rational() const;

  /// Canonical literal, e.g. "1/2*z^3 - z + 2". parse(order(), str()) == *this.
  std::string str() const;
  /// Parses the literal grammar: rational coefficients, "z" powers with "^",
  /// "+"/"-" term separators, "*" optional.
  static Cyclotomic parse(unsigned m, std::string_view text);

 private:
  Cyclotomic(unsigned m, std::vector<Rational> c) : order_(m), c_(std::move(c)) {}

  unsigned order_;
  std::vector<Rational> c_;  // size phi(order_)
};

inline Cyclotomic ring_zero_like(const Cyclotomic& x) { return Cyclotomic::zero(x.order()); }
inline Cyclotomic ring_one_like(const Cyclotomic& x) { return Cyclotomic::one(x.order()); }
inline bool ring_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic ring_inverse(const Cyclotomic& x) { return x.inverse(); }

}  // namespace smashhom
