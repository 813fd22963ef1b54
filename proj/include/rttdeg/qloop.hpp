#ifndef RTTDEG_QLOOP_HPP
#define RTTDEG_QLOOP_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/algebra.hpp"
#include "rttdeg/certificate.hpp"
#include "rttdeg/freealg.hpp"
#include "rttdeg/tensormat.hpp"

namespace rttdeg {

enum class QKind { TT, TbTb, TbT };

inline const char* qkind_name(QKind k) {
  switch (k) {
    case QKind::TT: return "tt";
    case QKind::TbTb: return "tbtb";
    case QKind::TbT: return "tbt";
  }
  return "?";
}

// Largest k with (q - q^{-1})^k dividing every coefficient without poles at
// q = +-1; 0 for the zero polynomial.
int qq_uniform_valuation(const QElem& p);
QElem divide_qq_power(const QElem& p, int k);

// Displayed component family of the quantum RTT relation in capital
// generators (level-0 pattern zeros substituted); the oracle the expansion
// machinery is compared against.
QElem qloop_family_display(int N, int i, int j, int k, int l, int r, int s);

// Quantum loop algebra in its A-form: relation components, the T / Tbar /
// Ttilde elements, certified level-shift identities, and the twisted
// subalgebras of both symmetric-pair types.
class QLoopCtx {
 public:
  explicit QLoopCtx(int N, int level_cap = 6);
  int N() const { return N_; }
  int level_cap() const { return cap_; }

  // exact coefficient of the matrix relation at levels (r, s >= 0), in
  // capital generators
  QElem relation_raw(QKind kind, int i, int j, int k, int l, int r, int s);

  // A-form component: rewritten in tau/taubar, divided by the maximal
  // uniform power of (q - q^{-1})
  QElem relation_component(QKind kind, int i, int j, int k, int l, int r, int s);

  // tagged A-form relation instances over the given index tuples with
  // levels r,s in [lo, hi]; includes the diagonal inverse constraints
  std::vector<std::pair<std::string, QElem>> relation_instances(
      const std::vector<std::array<int, 4>>& tuples, int lo, int hi,
      const std::vector<QKind>& kinds = {QKind::TT, QKind::TbTb, QKind::TbT});

  // T^(r,m) family: 'T' (tau-based), 'B' (taubar-based), 'W' (the mixed
  // family defined on 0 <= r <= m)
  QElem trm_expand(char family, int i, int j, int r, int m);

  // target and certificate of the level-shifted relation identity
  QElem rs_identity_target(int i, int j, int k, int l, int r, int s, int m, int n,
                           bool mutate = false);
  SpanResult check_rs_identity(int i, int j, int k, int l, int r, int s, int m, int n,
                               bool mutate = false, Pivot pivot = Pivot::min_col_nnz);

  // ---- twisted quantum loop algebras ----

  // image of S_ij^(r) in the A-form
  QElem embed_twisted_qloop(TwCase cs, int i, int j, int r) const;

  // S^(r,m) through the embedding, with the level-0 sign conventions and
  // exact divisions
  QElem srm_expand(TwCase cs, int i, int j, int r, int m);

  // mixed twisted family defined on 0 <= r <= m
  QElem stm_expand(TwCase cs, int i, int j, int r, int m);

  // free-algebra equality between srm_expand and its closed product form
  bool check_lemma_srm(TwCase cs, int i, int j, int r, int m, bool mutate = false);

  // reflection-relation family; entries either keep S abstract or carry the
  // embedded images
  RelationFamily<RatFun> twisted_family(TwCase cs, int cap, bool images);

  // case-specific level-0 constraints (LHS - RHS), under images when asked
  std::vector<std::pair<std::string, QElem>> twisted_level0(TwCase cs, bool images) const;

 private:
  const RelationFamily<RatFun>& family(QKind kind);
  QElem srm_base(TwCase cs, int i, int j);

  int N_, cap_;
  std::map<int, RelationFamily<RatFun>> fam_cache_;
  std::map<std::tuple<char, int, int, int, int>, QElem> trm_cache_;
  std::map<std::tuple<int, int, int, int, int>, QElem> srm_cache_;
};

}  // namespace rttdeg

#endif
