#ifndef RTTDEG_YANGIAN_HPP
#define RTTDEG_YANGIAN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/algebra.hpp"
#include "rttdeg/certificate.hpp"
#include "rttdeg/freealg.hpp"
#include "rttdeg/report.hpp"
#include "rttdeg/tensormat.hpp"

namespace rttdeg {

enum class ReduceStrategy { leftmost, rightmost };

inline Gen yt_gen(int i, int j, int r) {
  return Gen{Fam::yt, static_cast<int16_t>(i), static_cast<int16_t>(j), r};
}

// Yangian generator t_ij^(r) with the level-0 constant inlined.
YElem yt(int i, int j, int r);

// Rational RTT presentation of the Yangian: defining relations, the closed
// commutator rule certified against them, and the PBW normal form driven by
// that rule.  Normal forms are memoized per reduction strategy.
class YangianCtx {
 public:
  explicit YangianCtx(int N) : N_(N) {
    if (N < 1) throw InvalidDimension("YangianCtx: N must be positive");
  }
  int N() const { return N_; }

  // LHS - RHS of the defining component relation at (i,j,k,l,m,n)
  YElem relation(int i, int j, int k, int l, int m, int n) const;

  // closed-form commutator [t_ij^(r), t_kl^(s)] for r,s >= 1
  YElem commutator_rule(int i, int j, int r, int k, int l, int s) const;

  YElem normalize(const YElem& e, ReduceStrategy st = ReduceStrategy::leftmost);

  // span certificate for [t,t] - commutator_rule over the homogeneous slice
  // of defining relations; throws NotInSpanFatal when elimination fails
  SpanResult certify_commutator_rule(int i, int j, int r, int k, int l, int s,
                                     Pivot pivot = Pivot::min_col_nnz,
                                     bool mutate = false);

  // generating matrix t(u) truncated at the level cap, placed on a leg
  TensorMat<Poly> t_matrix(int leg, const std::vector<std::string>& vars,
                           const std::string& var, int cap) const;

 private:
  YElem normal_form_word(const Word& w, ReduceStrategy st);

  int N_;
  std::map<Word, YElem, WordLess> cache_[2];
};

// ---- twisted side -------------------------------------------------------

inline Gen ys_gen(int i, int j, int r) {
  return Gen{Fam::ys, static_cast<int16_t>(i), static_cast<int16_t>(j), r};
}

// Componentwise symmetry relations of the twisted generating matrix at
// u^{-r}, obtained by exact series expansion; returned as LHS - RHS.
std::vector<std::pair<std::string, YElem>> twisted_symmetry_components(TwCase cs, int N,
                                                                       int r);

// Component family of the reflection-type relation, denominators cleared.
// Trusted for exponent pairs with -eu, -ev <= cap.
RelationFamily<Poly> twisted_quaternary_family(TwCase cs, int N, int cap);

// Image of s_ij^(r) inside the Yangian (r = 0 gives the constant g_ij).
YElem embed_twisted_yangian(TwCase cs, int N, int i, int j, int r);

// Substitute the embedding images into all twisted defining relations up to
// the caps and assert the normal form vanishes.  `mutate` flips one sign in
// one image as a negative control.
Report verify_twisted_embedding(YangianCtx& ctx, TwCase cs, int rmax, bool mutate = false);

}  // namespace rttdeg

#endif
