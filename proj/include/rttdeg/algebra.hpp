#ifndef RTTDEG_ALGEBRA_HPP
#define RTTDEG_ALGEBRA_HPP

#include <string>

#include "rttdeg/errors.hpp"
#include "rttdeg/ncpoly.hpp"
#include "rttdeg/ratfun.hpp"

namespace rttdeg {

enum class Alg { yangian, qloop, ytw_o, ytw_sp, qtw_ai, qtw_aii };
enum class TwCase { orthogonal, symplectic };

inline std::string twcase_name(TwCase c) {
  return c == TwCase::orthogonal ? "o" : "sp";
}

// Index involution of the symplectic pairing: swaps 2k-1 <-> 2k.
inline int iprime(int i) { return (i % 2 == 0) ? i - 1 : i + 1; }

inline void require_even_for_symplectic(TwCase c, int N) {
  if (c == TwCase::symplectic && N % 2 != 0)
    throw SymplecticOddN("symplectic case needs even N");
}

// Constant matrix G defining the symmetric pair: identity (orthogonal) or
// the standard skew form sum_k (E_{2k-1,2k} - E_{2k,2k-1}) (symplectic).
inline int g_entry(TwCase c, int N, int i, int j) {
  require_even_for_symplectic(c, N);
  if (c == TwCase::orthogonal) return i == j ? 1 : 0;
  if (j == i + 1 && i % 2 == 1) return 1;
  if (j == i - 1 && i % 2 == 0) return -1;
  return 0;
}

// Quantum counterpart B of G: identity, or sum_k (q E_{2k-1,2k} - E_{2k,2k-1}).
inline RatFun b_entry(TwCase c, int N, int i, int j) {
  require_even_for_symplectic(c, N);
  if (c == TwCase::orthogonal) return i == j ? RatFun(1) : RatFun();
  if (j == i + 1 && i % 2 == 1) return RatFun::q();
  if (j == i - 1 && i % 2 == 0) return RatFun(-1);
  return RatFun();
}

// A-form generators.  The excluded level-0 symbols (tau strictly upper,
// taubar strictly lower: their T-counterparts are the constant zero) must
// never be materialized; these constructors are the single entry point.
inline Gen tau_gen(int i, int j, int r) {
  if (r == 0 && i < j) throw IndexOutOfRange("excluded symbol tau^(0) with i<j");
  return Gen{Fam::tau, static_cast<int16_t>(i), static_cast<int16_t>(j), r};
}
inline Gen taub_gen(int i, int j, int r) {
  if (r == 0 && i > j) throw IndexOutOfRange("excluded symbol taubar^(0) with i>j");
  return Gen{Fam::taub, static_cast<int16_t>(i), static_cast<int16_t>(j), r};
}

using QElem = NCPoly<RatFun>;  // quantum loop side, coefficients in Q(q)
using YElem = NCPoly<Poly>;    // Yangian side, coefficients in Q[hbar]
using LElem = NCPoly<Rational>;  // classical loop side

// T_ij^(r) in the A-form: (q - q^{-1}) tau_ij^(r), with the level-0
// conventions (strict upper zero, diagonal 1 + (q-1) tau_ii^(0)).
inline QElem aform_T(int i, int j, int r) {
  const RatFun qq = RatFun::q_minus_qinv();
  if (r > 0) return QElem::generator(tau_gen(i, j, r), qq);
  if (i < j) return QElem();
  if (i > j) return QElem::generator(tau_gen(i, j, 0), qq);
  QElem p = QElem::one();
  p += QElem::generator(tau_gen(i, i, 0), RatFun(Poly({Rational(-1), Rational(1)})));
  return p;
}
inline QElem aform_Tbar(int i, int j, int r) {
  const RatFun qq = RatFun::q_minus_qinv();
  if (r > 0) return QElem::generator(taub_gen(i, j, r), qq);
  if (i > j) return QElem();
  if (i < j) return QElem::generator(taub_gen(i, j, 0), qq);
  QElem p = QElem::one();
  p += QElem::generator(taub_gen(i, i, 0), RatFun(Poly({Rational(-1), Rational(1)})));
  return p;
}

// Expand the raw capital generators T / Tbar into the A-form.  tau symbols
// pass through; other families are foreign here.
inline QElem to_aform(const QElem& raw) {
  return raw.substituted([](const Gen& g) -> QElem {
    switch (g.fam) {
      case Fam::capT: return aform_T(g.i, g.j, g.level);
      case Fam::capTb: return aform_Tbar(g.i, g.j, g.level);
      case Fam::tau:
      case Fam::taub: return QElem::generator(g);
      default: throw UnknownAlgebraTag("to_aform: unexpected family");
    }
  });
}

// Replace level-0 symbols by their defining constants for the tagged
// algebra.  Non-constant symbols (including abstract level-0 generators
// with no defining value) pass through untouched.
template <class C>
NCPoly<C> substitute_constants(const NCPoly<C>& a, Alg alg, int N) {
  return a.substituted([&](const Gen& g) -> NCPoly<C> {
    switch (alg) {
      case Alg::yangian:
        if (g.fam == Fam::yt && g.level == 0)
          return g.i == g.j ? NCPoly<C>::one() : NCPoly<C>();
        break;
      case Alg::qloop:
        if constexpr (std::is_same_v<C, RatFun>) {
          if (g.fam == Fam::capT && g.level == 0) {
            if (g.i < g.j) return NCPoly<C>();
            if (g.i == g.j) {
              NCPoly<C> p = NCPoly<C>::one();
              p += NCPoly<C>::generator(tau_gen(g.i, g.i, 0),
                                        RatFun(Poly({Rational(-1), Rational(1)})));
              return p;
            }
          }
          if (g.fam == Fam::capTb && g.level == 0) {
            if (g.i > g.j) return NCPoly<C>();
            if (g.i == g.j) {
              NCPoly<C> p = NCPoly<C>::one();
              p += NCPoly<C>::generator(taub_gen(g.i, g.i, 0),
                                        RatFun(Poly({Rational(-1), Rational(1)})));
              return p;
            }
          }
        } else {
          throw UnknownAlgebraTag("qloop constants need Q(q) coefficients");
        }
        break;
      case Alg::ytw_o:
      case Alg::ytw_sp: {
        TwCase c = alg == Alg::ytw_o ? TwCase::orthogonal : TwCase::symplectic;
        if (g.fam == Fam::ys && g.level == 0) {
          int ge = g_entry(c, N, g.i, g.j);
          return ge == 0 ? NCPoly<C>() : NCPoly<C>(C(Rational(ge)));
        }
        break;
      }
      case Alg::qtw_ai:
        if (g.fam == Fam::capS && g.level == 0) {
          if (g.i < g.j) return NCPoly<C>();
          if (g.i == g.j) return NCPoly<C>::one();
        }
        break;
      case Alg::qtw_aii:
        if (g.fam == Fam::capS && g.level == 0) {
          if (g.i < g.j && g.j != iprime(g.i)) return NCPoly<C>();
        }
        break;
    }
    return NCPoly<C>::generator(g);
  });
}

}  // namespace rttdeg

#endif
