#ifndef RTTDEG_RING_HPP
#define RTTDEG_RING_HPP

#include "rttdeg/poly.hpp"
#include "rttdeg/ratfun.hpp"
#include "rttdeg/rational.hpp"

namespace rttdeg {

// Small uniform interface over the coefficient rings used throughout
// (Rational, Poly, RatFun, and NCPoly via its own member functions).
template <class C>
inline bool ring_is_zero(const C& c) {
  return c.is_zero();
}
inline bool ring_is_zero(const Rational& c) { return c == 0; }

template <class C>
inline C ring_one() {
  return C(Rational(1));
}
template <>
inline Rational ring_one<Rational>() {
  return Rational(1);
}

}  // namespace rttdeg

#endif
