#include "smashhom/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace smashhom {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex g_cyclo_mutex;

Polynomial<Rational>& cyclotomic_entry(unsigned m, std::map<unsigned, Polynomial<Rational>>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // z^m - 1 divided by all lower cyclotomic polynomials at divisors of m.
  std::vector<Rational> xm(m + 1, Rational(0));
  xm[0] = -1;
  xm[m] = 1;
  Polynomial<Rational> p(std::move(xm), "z");
  for (unsigned e = 1; e < m; ++e) {
    if (m % e == 0) p = Polynomial<Rational>::divexact(p, cyclotomic_entry(e, cache));
  }
  return cache.emplace(m, std::move(p)).first->second;
}

struct CycContext {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<Rational> minpoly;            // size phi+1, monic
  std::vector<std::vector<Rational>> red;   // red[k] = z^{phi+k} mod Phi_m, k = 0..phi-2
};

const CycContext& context(unsigned m) {
  // One-entry thread-local cache: a computation works in a single field order,
  // and this sits under the elimination inner loop.
  static thread_local const CycContext* last = nullptr;
  if (last && last->m == m) return *last;
  static std::map<unsigned, CycContext> cache;
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) {
    last = &it->second;
    return it->second;
  }
  if (m == 0) throw Error("cyclotomic order must be positive");
  CycContext ctx;
  ctx.m = m;
  Polynomial<Rational> phi_poly = cyclotomic_polynomial(m);
  ctx.phi = static_cast<unsigned>(phi_poly.degree());
  ctx.minpoly = phi_poly.coeffs();
  if (ctx.phi >= 2) {
    ctx.red.resize(ctx.phi - 1);
    std::vector<Rational> row(ctx.phi);
    for (unsigned i = 0; i < ctx.phi; ++i) row[i] = -ctx.minpoly[i];
    ctx.red[0] = row;
    for (unsigned k = 1; k + 1 < ctx.phi; ++k) {
      std::vector<Rational> next(ctx.phi, Rational(0));
      const Rational top = row[ctx.phi - 1];
      for (unsigned i = ctx.phi - 1; i >= 1; --i) next[i] = row[i - 1];
      next[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < ctx.phi; ++i) next[i] += top * ctx.red[0][i];
      ctx.red[k] = next;
      row = std::move(next);
    }
  } else if (ctx.phi == 1) {
    // Q itself; nothing to reduce.
  }
  const CycContext& ref = cache.emplace(m, std::move(ctx)).first->second;
  last = &ref;
  return ref;
}

void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order())
    throw OrderMismatchError("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
}

}  // namespace

Polynomial<Rational> cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, Polynomial<Rational>> cache;
  static std::mutex mtx;
  if (m == 0) throw Error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mtx);
  return cyclotomic_entry(m, cache);
}

Cyclotomic Cyclotomic::zero(unsigned m) {
  const CycContext& ctx = context(m);
  return Cyclotomic(m, std::vector<Rational>(ctx.phi, Rational(0)));
}

Cyclotomic Cyclotomic::one(unsigned m) { return from_rational(m, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(unsigned m, const Rational& q) {
  Cyclotomic r = zero(m);
  r.c_[0] = q;
  r.c_[0].canonicalize();  // mpq comparisons assume canonical form
  return r;
}

Cyclotomic Cyclotomic::root(unsigned m, long power) {
  long p = power % static_cast<long>(m);
  if (p < 0) p += m;
  std::vector<Rational> c(static_cast<size_t>(p) + 1, Rational(0));
  c[static_cast<size_t>(p)] = 1;
  return from_coeffs(m, c);
}

Cyclotomic Cyclotomic::from_coeffs(unsigned m, const std::vector<Rational>& c) {
  const CycContext& ctx = context(m);
  std::vector<Rational> canon = c;
  for (Rational& q : canon) q.canonicalize();
  Polynomial<Rational> p(std::move(canon), "z");
  if (p.degree() >= static_cast<long>(ctx.phi)) {
    Polynomial<Rational> minpoly(ctx.minpoly, "z");
    Polynomial<Rational> q, r;
    Polynomial<Rational>::divmod(p, minpoly, q, r);
    p = std::move(r);
  }
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (long i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
  return Cyclotomic(m, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b);
  Cyclotomic r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b);
  Cyclotomic r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  check_same_order(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  check_same_order(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(a, b);
  const CycContext& ctx = context(a.order());
  const unsigned phi = ctx.phi;
  if (phi == 1) {
    Cyclotomic r = a;
    r.c_[0] *= b.c_[0];
    return r;
  }
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + phi);
  for (unsigned k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k] == 0) continue;
    const std::vector<Rational>& row = ctx.red[k - phi];
    for (unsigned i = 0; i < phi; ++i)
      if (row[i] != 0) out[i] += conv[k] * row[i];
  }
  return Cyclotomic(a.order(), std::move(out));
}

// this -= a*b without temporaries; the elimination inner loop lives here.
void Cyclotomic::submul(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_order(*this, a);
  check_same_order(*this, b);
  const CycContext& ctx = context(order_);
  const unsigned phi = ctx.phi;
  static thread_local mpq_class tmp;
  if (phi == 1) {
    mpq_mul(tmp.get_mpq_t(), a.c_[0].get_mpq_t(), b.c_[0].get_mpq_t());
    mpq_sub(c_[0].get_mpq_t(), c_[0].get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  static thread_local std::vector<mpq_class> conv;
  if (conv.size() < 2 * phi - 1) conv.resize(2 * phi - 1);
  for (unsigned k = 0; k < 2 * phi - 1; ++k) mpq_set_si(conv[k].get_mpq_t(), 0, 1);
  for (unsigned i = 0; i < phi; ++i) {
    if (mpq_sgn(a.c_[i].get_mpq_t()) == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (mpq_sgn(b.c_[j].get_mpq_t()) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      mpq_add(conv[i + j].get_mpq_t(), conv[i + j].get_mpq_t(), tmp.get_mpq_t());
    }
  }
  for (unsigned i = 0; i < phi; ++i)
    mpq_sub(c_[i].get_mpq_t(), c_[i].get_mpq_t(), conv[i].get_mpq_t());
  for (unsigned k = phi; k < 2 * phi - 1; ++k) {
    if (mpq_sgn(conv[k].get_mpq_t()) == 0) continue;
    const std::vector<Rational>& row = ctx.red[k - phi];
    for (unsigned i = 0; i < phi; ++i) {
      if (row[i] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), conv[k].get_mpq_t(), row[i].get_mpq_t());
      mpq_sub(c_[i].get_mpq_t(), c_[i].get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ZeroInverseError("inverse of zero cyclotomic");
  const CycContext& ctx = context(order_);
  if (ctx.phi == 1) return from_rational(order_, Rational(1) / c_[0]);
  Polynomial<Rational> a(c_, "z");
  Polynomial<Rational> minpoly(ctx.minpoly, "z");
  Polynomial<Rational> u, v;
  Polynomial<Rational> g = Polynomial<Rational>::ext_gcd(a, minpoly, u, v);
  // The minimal polynomial is irreducible over Q, so the gcd is 1.
  if (g.degree() != 0) throw Error("cyclotomic inverse: unexpected gcd");
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (long i = 0; i <= u.degree(); ++i) out[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& s) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Rational Cyclotomic::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0)
      throw NotRationalError("cyclotomic value is not rational: " + str());
  return c_[0];
}

std::string Cyclotomic::str() const {
  std::string out;
  for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i) {
    const Rational& coef = c_[static_cast<size_t>(i)];
    if (coef == 0) continue;
    const bool negative = coef < 0;
    const Rational mag = abs(coef);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

// One term of the literal grammar: [rational] ['*'] ['z' ['^' digits]].
struct Term {
  Rational coeff;
  unsigned long power = 0;
};

Term parse_term(std::string_view t, unsigned m) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
  skip_ws();
  if (i == t.size()) throw ParseError("empty term in cyclotomic literal");

  Term term;
  term.coeff = 1;
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(t[i]))) {
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    std::string num(t.substr(start, i - start));
    skip_ws();
    if (i < t.size() && t[i] == '/') {
      ++i;
      skip_ws();
      size_t dstart = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (i == dstart) throw ParseError("missing denominator in '" + std::string(t) + "'");
      num += "/" + std::string(t.substr(dstart, i - dstart));
    }
    term.coeff = parse_rational(num);
    saw_coeff = true;
    skip_ws();
    if (i < t.size() && t[i] == '*') {
      ++i;
      skip_ws();
      if (i == t.size() || t[i] != 'z') throw ParseError("expected 'z' after '*' in '" + std::string(t) + "'");
    }
  }
  if (i < t.size() && t[i] == 'z') {
    ++i;
    term.power = 1;
    skip_ws();
    if (i < t.size() && t[i] == '^') {
      ++i;
      skip_ws();
      size_t pstart = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (i == pstart) throw ParseError("missing exponent in '" + std::string(t) + "'");
      term.power = std::stoul(std::string(t.substr(pstart, i - pstart)));
    }
  } else if (!saw_coeff) {
    throw ParseError("unexpected character in cyclotomic literal: '" + std::string(t) + "'");
  }
  skip_ws();
  if (i != t.size()) throw ParseError("trailing junk in cyclotomic term: '" + std::string(t) + "'");
  term.power %= m;
  return term;
}

}  // namespace

Cyclotomic Cyclotomic::parse(unsigned m, std::string_view text) {
  // Split on top-level '+'/'-' (every '-' here is a term separator or sign;
  // the grammar has no parentheses).
  std::vector<std::pair<int, std::string>> parts;  // sign, term text
  int sign = 1;
  std::string cur;
  bool any = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (!cur.empty() && cur.find_first_not_of(" \t") != std::string::npos) {
        parts.emplace_back(sign, cur);
        sign = 1;
      } else if (any && cur.find_first_not_of(" \t") == std::string::npos && !parts.empty()) {
        // consecutive signs like "+-" are not in the grammar
        throw ParseError("misplaced sign in cyclotomic literal: '" + std::string(text) + "'");
      }
      if (ch == '-') sign = -sign;
      cur.clear();
      any = true;
      continue;
    }
    cur += ch;
    any = true;
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) parts.emplace_back(sign, cur);
  if (parts.empty()) throw ParseError("empty cyclotomic literal");

  std::vector<Rational> coeffs(m, Rational(0));
  for (const auto& [s, part] : parts) {
    Term t = parse_term(part, m);
    coeffs[t.power] += s < 0 ? Rational(-t.coeff) : t.coeff;
  }
  return from_coeffs(m, coeffs);
}

}  // namespace smashhom
