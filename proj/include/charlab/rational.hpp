#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace charlab {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "3", "-1", "3/2".
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return r.get_num().get_si();
}

}  // namespace charlab
