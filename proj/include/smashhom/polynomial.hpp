#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smashhom/errors.hpp"
#include "smashhom/rational.hpp"

namespace smashhom {

// Coefficient-ring hooks. Cyclotomic overloads live in cyclotomic.hpp;
// they exist because a cyclotomic zero/one needs to know its field order.
inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline Rational ring_inverse(const Rational& x) {
  if (x == 0) throw ZeroInverseError("division by zero rational");
  return Rational(1) / x;
}

/// Dense univariate polynomial over an exact field, lowest degree first.
/// No trailing zero coefficients; the zero polynomial has an empty
/// coefficient vector and degree() == -1.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs, std::string var = "t")
      : var_(std::move(var)), c_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial zero(std::string var = "t") { return Polynomial(std::vector<T>{}, std::move(var)); }
  static Polynomial constant(T c, std::string var = "t") {
    return Polynomial(std::vector<T>{std::move(c)}, std::move(var));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }

  const T& operator[](size_t i) const { return c_.at(i); }
  const T& leading() const { return c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<T> r = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const std::vector<T>& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return Polynomial(std::move(r), a.var_);
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> r = a.c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r), a.var_);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.var_);
    const T z = ring_zero_like(a.c_[0]);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, z);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r), a.var_);
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> r = a.c_;
    for (auto& x : r) x = s * x;
    return Polynomial(std::move(r), a.var_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw ZeroInverseError("polynomial division by zero");
    if (a.degree() < b.degree()) {
      q = zero(a.var_);
      r = a;
      return;
    }
    const T lead_inv = ring_inverse(b.leading());
    std::vector<T> rem = a.c_;
    std::vector<T> quo(a.c_.size() - b.c_.size() + 1, ring_zero_like(b.leading()));
    for (long i = static_cast<long>(rem.size()) - 1; i >= b.degree(); --i) {
      if (ring_is_zero(rem[i])) continue;
      T f = rem[i] * lead_inv;
      for (long j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] = rem[i - b.degree() + j] - f * b.c_[j];
      quo[i - b.degree()] = std::move(f);
    }
    q = Polynomial(std::move(quo), a.var_);
    r = Polynomial(std::move(rem), a.var_);
  }

  /// Exact quotient; throws if the division leaves a remainder.
  static Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    Polynomial q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("divexact: nonzero remainder");
    return q;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return ring_inverse(leading()) * *this;
  }

  /// Monic gcd by the Euclidean algorithm.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Extended gcd: returns monic g and sets u, v with u*a + v*b = g.
  static Polynomial ext_gcd(const Polynomial& a, const Polynomial& b, Polynomial& u, Polynomial& v) {
    Polynomial r0 = a, r1 = b;
    const T one = a.is_zero() ? ring_one_like(b.leading()) : ring_one_like(a.leading());
    Polynomial s0 = constant(one, a.var_), s1 = zero(a.var_);
    Polynomial t0 = zero(a.var_), t1 = constant(one, a.var_);
    while (!r1.is_zero()) {
      Polynomial q, r;
      divmod(r0, r1, q, r);
      Polynomial s = s0 - q * s1;
      Polynomial t = t0 - q * t1;
      r0 = std::move(r1); r1 = std::move(r);
      s0 = std::move(s1); s1 = std::move(s);
      t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.is_zero()) { u = s0; v = t0; return r0; }
    T inv = ring_inverse(r0.leading());
    u = inv * s0;
    v = inv * t0;
    return inv * r0;
  }

  T eval(const T& x) const {
    if (is_zero()) return ring_zero_like(x);
    T acc = c_.back();
    for (long i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void normalize() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  std::string var_ = "t";
  std::vector<T> c_;
};

/// The m-th cyclotomic polynomial over Q, monic of degree phi(m), in "z".
Polynomial<Rational> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

}  // namespace smashhom
