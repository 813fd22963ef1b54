#ifndef RTTDEG_CLASSICAL_HPP
#define RTTDEG_CLASSICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/algebra.hpp"
#include "rttdeg/qloop.hpp"
#include "rttdeg/report.hpp"

namespace rttdeg {

inline Gen loop_gen(int i, int j, int spower) {
  return Gen{Fam::loopE, static_cast<int16_t>(i), static_cast<int16_t>(j), spower};
}

// Laurent polynomial in the loop parameter attached to one matrix position:
// map s-exponent -> coefficient.
using LaurentMap = std::map<int, Rational>;

// Enveloping algebra of the loop algebra with PBW normal form, the
// specialization map from the A-form, the filtration ideals at Lie level,
// the twisted loop algebras, and the separation functionals used by the
// injectivity argument.
class ClassicalCtx {
 public:
  explicit ClassicalCtx(int N) : N_(N) {
    if (N < 1) throw InvalidDimension("ClassicalCtx");
  }
  int N() const { return N_; }

  LElem normalize(const LElem& e);

  // tau_ij^(r) -> E_ij s^r, taubar_ij^(r) -> -E_ij s^{-r}, coefficients
  // evaluated at q = 1; requires pole-free coefficients
  LElem psi_apply(const QElem& e);

  int N_;
  std::map<Word, LElem, WordLess> cache_;
};

// Lie element (word length <= 1) decomposed per matrix position.
std::map<std::pair<int, int>, LaurentMap> lie_components(const LElem& e);

// Membership of a Lie element in the span of X s^r (s-1)^m (untwisted), or
// of the displayed twisted spanning set when a case is given.
bool km_test(const LElem& e, int m, std::optional<TwCase> twisted = std::nullopt,
             int N = 2);

enum class SigmaVariant { current, loop };

// Fixed-point test for the involution defining the twisted current / loop
// algebra.
bool sigma_membership(TwCase cs, int N, const LElem& e, SigmaVariant variant);

// Divide a relation by the largest power of (q - q^{-1}) keeping every
// coefficient pole-free at q = 1, specialize, normalize, and require zero.
bool classical_limit_check(ClassicalCtx& cctx, const QElem& relation);

// psi-image of the double-indexed quantum elements against their closed
// Laurent forms.
bool psi_closed_form_check(ClassicalCtx& cctx, QLoopCtx& qctx, char family, int i, int j,
                           int r, int m);
// twisted families 'S' and 'Z' (the mixed one), per case
bool psi_closed_form_check_tw(ClassicalCtx& cctx, QLoopCtx& qctx, char family, TwCase cs,
                              int i, int j, int r, int m);

// Dense element of the r-fold tensor power of N x N matrices over Q.
struct ProbeTensor {
  int N = 0, arity = 0, dim = 0;
  std::vector<Rational> a;  // dim^2 entries, row-major
  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
};

// Composite of the coproduct, the matrix evaluation and the derivative
// functional at the multi-index alpha.
ProbeTensor separation_probe(int N, const LElem& e, int arity,
                             const std::vector<int>& alpha);

// Full-rank check for the probe images of the ordered spanning monomials of
// fixed total filtration degree.
Report monomial_independence_check(ClassicalCtx& cctx, int m, int maxlen,
                                   bool mutate = false);

// Sound refutation of a filtration-membership claim: a nonzero probe of the
// specialized element at total derivative order M-1 proves the element is
// outside the M-th filtration ideal.  Returns the probe description.
std::optional<std::string> km_refute(ClassicalCtx& cctx, const QElem& target, int M,
                                     int max_arity = 6);

}  // namespace rttdeg

#endif
