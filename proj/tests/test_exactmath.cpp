#include <doctest.h>

#include "smashhom/cyclotomic.hpp"
#include "smashhom/power_series.hpp"

using namespace smashhom;

namespace {

// Small deterministic generator for property tests.
struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
  Rational rational() {
    Rational q(range(-9, 9), range(1, 7));
    q.canonicalize();
    return q;
  }
  Cyclotomic cyclotomic(unsigned m) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < euler_phi(m); ++i) c.push_back(rational());
    return Cyclotomic::from_coeffs(m, c);
  }
};

Polynomial<Rational> poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial<Rational>(std::move(c), "t");
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == Polynomial<Rational>({Rational(-1), Rational(1)}, "z"));
  CHECK(cyclotomic_polynomial(4) == Polynomial<Rational>({Rational(1), Rational(0), Rational(1)}, "z"));

  // Independent route for m = 6: divide z^6 - 1 by (z-1)(z+1)(z^2+z+1).
  std::vector<Rational> z6(7, Rational(0));
  z6[0] = -1;
  z6[6] = 1;
  Polynomial<Rational> num(z6, "z");
  Polynomial<Rational> den = Polynomial<Rational>({Rational(-1), Rational(1)}, "z") *
                             Polynomial<Rational>({Rational(1), Rational(1)}, "z") *
                             Polynomial<Rational>({Rational(1), Rational(1), Rational(1)}, "z");
  Polynomial<Rational> expected = Polynomial<Rational>::divexact(num, den);
  CHECK(cyclotomic_polynomial(6) == expected);
  CHECK(expected == Polynomial<Rational>({Rational(1), Rational(-1), Rational(1)}, "z"));
}

TEST_CASE("cyclotomic arithmetic basics") {
  Cyclotomic i = Cyclotomic::root(4);
  CHECK(i * i == Cyclotomic::from_rational(4, Rational(-1)));

  Cyclotomic z3 = Cyclotomic::root(3);
  CHECK((Cyclotomic::one(3) + z3 + z3 * z3).is_zero());

  for (unsigned m : {3u, 4u, 5u, 8u, 12u})
    CHECK(Cyclotomic::root(m).inverse() == Cyclotomic::root(m, static_cast<long>(m) - 1));

  CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4), OrderMismatchError);
  CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), ZeroInverseError);
}

TEST_CASE("as_rational") {
  CHECK(Cyclotomic::from_rational(4, Rational(3, 2)).as_rational() == Rational(3, 2));
  CHECK_THROWS_AS(Cyclotomic::root(4).as_rational(), NotRationalError);
  Cyclotomic z3 = Cyclotomic::root(3);
  CHECK((z3 + z3 * z3).as_rational() == Rational(-1));
  // embedding round trip
  Lcg rng(7);
  for (int k = 0; k < 50; ++k) {
    Rational q = rng.rational();
    CHECK(Cyclotomic::from_rational(8, q).as_rational() == q);
  }
}

TEST_CASE("inverse is a true inverse") {
  Lcg rng(2024);
  for (unsigned m : {3u, 4u, 7u, 8u, 12u}) {
    for (int k = 0; k < 25; ++k) {
      Cyclotomic a = rng.cyclotomic(m);
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("reduction is canonical across arithmetic paths") {
  Lcg rng(99);
  for (unsigned m : {4u, 5u, 9u}) {
    for (int k = 0; k < 25; ++k) {
      Cyclotomic a = rng.cyclotomic(m), b = rng.cyclotomic(m), c = rng.cyclotomic(m);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(Cyclotomic::parse(m, ((a - b) * c).str()) == (a - b) * c);
    }
  }
}

TEST_CASE("literal parsing") {
  CHECK(Cyclotomic::parse(8, "1/2*z^3 - z + 2") ==
        Cyclotomic::from_coeffs(8, {Rational(2), Rational(-1), Rational(0), Rational(1, 2)}));
  CHECK(Cyclotomic::parse(4, "2z").str() == "2*z");
  CHECK(Cyclotomic::parse(4, " - 1 ").str() == "-1");
  CHECK(Cyclotomic::parse(3, "z^5") == Cyclotomic::root(3, 5));
  CHECK_THROWS_AS(Cyclotomic::parse(4, "z^"), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse(4, "1//2"), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse(4, "w"), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse(4, ""), ParseError);
}

TEST_CASE("print-parse round trip on random elements") {
  Lcg rng(5);
  for (unsigned m : {1u, 2u, 3u, 4u, 8u, 12u})
    for (int k = 0; k < 20; ++k) {
      Cyclotomic a = rng.cyclotomic(m);
      CHECK(Cyclotomic::parse(m, a.str()) == a);
    }
}

TEST_CASE("laurent expansion examples") {
  RationalFunction geom(poly({1}), poly({1, -1}));
  PowerSeries s = laurent_expand(geom, 0, 3);
  CHECK(s.coeffs() == std::vector<Rational>{1, 1, 1, 1});

  RationalFunction f(poly({0, 0, 1}), poly({1, 0, -1}));
  PowerSeries s2 = laurent_expand(f, 0, 6);
  CHECK(s2.coeffs() == std::vector<Rational>{0, 0, 1, 0, 1, 0, 1});

  RationalFunction g(poly({1}), poly({0, 1, -1}));  // t^-1 / (1 - t)
  PowerSeries s3 = laurent_expand(g, -1, 2);
  CHECK(s3.offset() == -1);
  CHECK(s3.coeffs() == std::vector<Rational>{1, 1, 1, 1});

  CHECK_THROWS_AS(laurent_expand(g, 0, 2), PoleError);
}

TEST_CASE("laurent expansion is multiplicative") {
  Lcg rng(31);
  auto random_rf = [&] {
    std::vector<Rational> num, den;
    for (int i = 0; i < 3; ++i) num.push_back(rng.rational());
    den.push_back(Rational(rng.range(1, 5)));  // unit at 0
    for (int i = 0; i < 2; ++i) den.push_back(rng.rational());
    return RationalFunction(Polynomial<Rational>(num, "t"), Polynomial<Rational>(den, "t"));
  };
  for (int k = 0; k < 30; ++k) {
    RationalFunction f = random_rf(), g = random_rf();
    PowerSeries lhs = laurent_expand(f * g, 0, 8);
    PowerSeries rhs = laurent_expand(f, 0, 8) * laurent_expand(g, 0, 8);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("power series bookkeeping") {
  PowerSeries a(-2, {Rational(1), Rational(2), Rational(3), Rational(4)});  // exponents -2..1
  CHECK(a.trunc() == 1);
  CHECK(a.at(-2) == 1);
  CHECK(a.shifted(3).offset() == 1);
  CHECK(a.shifted(3).at(1) == 1);
  PowerSeries b(0, {Rational(3), Rational(4)});
  // equality only looks at the shared range 0..1
  CHECK(a == b);
  CHECK_THROWS(b.at(2));
}

TEST_CASE("rational function canonical form") {
  RationalFunction f(poly({0, 2}), poly({2, -2}));  // 2t / (2 - 2t)
  CHECK(f.den().leading() == 1);                    // monic denominator
  RationalFunction g(poly({0, 1}), poly({1, -1}));
  CHECK(f == g);
  CHECK_THROWS_AS(RationalFunction(poly({1}), poly({})), ZeroInverseError);
}
