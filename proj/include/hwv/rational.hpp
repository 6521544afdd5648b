#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hwv {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace hwv
