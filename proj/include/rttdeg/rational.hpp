#ifndef RTTDEG_RATIONAL_HPP
#define RTTDEG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace rttdeg {

// Arbitrary-precision rational, always stored canonically (positive
// denominator, reduced).  GMP keeps the invariants for us.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace rttdeg

#endif
