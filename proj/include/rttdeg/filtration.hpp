#ifndef RTTDEG_FILTRATION_HPP
#define RTTDEG_FILTRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rttdeg/classical.hpp"
#include "rttdeg/qloop.hpp"

namespace rttdeg {

// Formal product of double-indexed elements with a field coefficient; the
// carrier of the filtration-degree calculus.  Families: 'T', 'B', 'W' for
// the untwisted elements, 'S', 'Z' for the twisted ones (case-tagged).
struct Marker {
  char fam;
  TwCase tw = TwCase::orthogonal;
  int i, j, r, m;
  std::string id() const;
};

struct FilteredTerm {
  RatFun coeff;
  std::vector<Marker> markers;
};

struct FilteredExpr {
  std::vector<FilteredTerm> terms;
  FilteredExpr& add(RatFun c, std::vector<Marker> ms) {
    terms.push_back({std::move(c), std::move(ms)});
    return *this;
  }
};

// Filtration degree: (q-1)-adic valuation of the coefficient plus the sum of
// the markers' second indices.
int filt_degree(const FilteredTerm& t);

QElem expand_marker(QLoopCtx& qctx, const Marker& m);
QElem expand(QLoopCtx& qctx, const FilteredExpr& e);

// Search bounds for the congruence engine (defaults mirror the shapes in
// the degeneration proofs: short products, levels near the target's).
struct CongruenceBounds {
  int level_cap = 2;    // marker level cap in the dictionary
  int m_cap = -1;       // marker m cap; -1 = threshold + 1
  int shift_cap = 2;    // allowed (q-1)-prefactor powers
  bool use_relations = true;
  int rel_level_hi = -1;  // -1 = threshold + 1
  std::vector<char> single_fams{'T', 'B', 'W'};
  std::vector<std::pair<char, char>> pair_fams{
      {'T', 'T'}, {'T', 'B'}, {'T', 'W'}, {'W', 'T'}};
  std::vector<std::array<int, 4>> rel_tuples;  // empty = derive from target
  std::vector<std::pair<std::string, QElem>> extra_relations;
  bool diagnose_integrality = false;  // report pole coefficients instead of solving integrally
};

struct CongruenceOutcome {
  enum class Kind { certified, inconclusive, integrality_failed, refuted };
  Kind kind = Kind::inconclusive;
  std::optional<Certificate> cert;
  std::string detail;
  bool passed() const { return kind == Kind::certified; }
};

// Decompose expand(target) as (relation combination) + (explicit part of
// filtration degree >= threshold with coefficients pole-free at q = 1).
// Failure at the bounds is inconclusive; a nonzero separation probe of the
// specialized target at derivative order threshold-1 is a sound refutation.
CongruenceOutcome congruence_check(QLoopCtx& qctx, ClassicalCtx& cctx,
                                   const FilteredExpr& target, int threshold,
                                   const CongruenceBounds& bounds = {});

// ---- the statement-level checks -----------------------------------------

// graded bracket relation of the degenerate algebra at (i,j,k,l,m,n);
// mutate flips the sign of the leading bracket term (specialization-visible)
CongruenceOutcome graded_yangian_check(QLoopCtx& qctx, ClassicalCtx& cctx, int i, int j,
                                       int k, int l, int m, int n, bool mutate = false);

// generator assignment of the degeneration isomorphism
FilteredExpr phi_image(int i, int j, int m);

// twisted S^(r,m) against its degree-m congruence form, threshold m+1
CongruenceOutcome scong_check(QLoopCtx& qctx, ClassicalCtx& cctx, TwCase cs, int i, int j,
                              int r, int m, bool mutate = false);

// independence of the twisted class of the level index r > 0
CongruenceOutcome zeta_independence_check(QLoopCtx& qctx, ClassicalCtx& cctx, TwCase cs,
                                          int i, int j, int m, int r1, int r2);

// pairwise congruences of the three double-indexed families at level 0
bool tbar_congruence_check(QLoopCtx& qctx, ClassicalCtx& cctx, int i, int j, int m);

// commuting square of the twisted degeneration: the twisted generator image
// pushed through the graded isomorphism against S^(1,m)
CongruenceOutcome twisted_phi_check(QLoopCtx& qctx, ClassicalCtx& cctx, TwCase cs, int i,
                                    int j, int m, bool mutate = false);

}  // namespace rttdeg

#endif
