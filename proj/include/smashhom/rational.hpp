#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "smashhom/errors.hpp"

namespace smashhom {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p", or "p/q" in base 10.
inline Rational parse_rational(std::string_view s) {
  try {
    Rational q(std::string(s), 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal: '" + std::string(s) + "'");
  }
}

}  // namespace smashhom
