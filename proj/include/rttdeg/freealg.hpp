#ifndef RTTDEG_FREEALG_HPP
#define RTTDEG_FREEALG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/algebra.hpp"
#include "rttdeg/certificate.hpp"
#include "rttdeg/linsolve.hpp"
#include "rttdeg/ncpoly.hpp"

namespace rttdeg {

template <class C>
RatFun lift_to_field(const C& c);
template <>
inline RatFun lift_to_field<RatFun>(const RatFun& c) {
  return c;
}
template <>
inline RatFun lift_to_field<Poly>(const Poly& c) {
  return RatFun(c);
}
template <>
inline RatFun lift_to_field<Rational>(const Rational& c) {
  return RatFun(c);
}

template <class C>
NCPoly<RatFun> lift_poly(const NCPoly<C>& p) {
  return p.map_coeffs([](const C& c) { return lift_to_field(c); });
}

using TaggedRelation = std::pair<std::string, NCPoly<RatFun>>;

template <class C>
std::vector<TaggedRelation> lift_relations(
    const std::vector<std::pair<std::string, NCPoly<C>>>& rels) {
  std::vector<TaggedRelation> out;
  out.reserve(rels.size());
  for (const auto& [id, r] : rels) out.emplace_back(id, lift_poly(r));
  return out;
}

struct SpanResult {
  std::optional<Certificate> cert;      // present iff the target is in the span
  NCPoly<RatFun> residual;              // nonzero remainder otherwise
};

// Exact decision: is `target` a field-linear combination of the given
// relation instances?  On success the returned certificate has been
// re-verified by expansion.
inline SpanResult span_membership(const NCPoly<RatFun>& target,
                                  const std::vector<TaggedRelation>& relations,
                                  Pivot strategy = Pivot::min_col_nnz,
                                  const std::string& target_id = "target") {
  std::map<Word, int, WordLess> row_of;
  auto row = [&](const Word& w) {
    auto it = row_of.find(w);
    if (it != row_of.end()) return it->second;
    int idx = static_cast<int>(row_of.size());
    row_of.emplace(w, idx);
    return idx;
  };

  SparseSolver solver;
  for (const auto& [id, rel] : relations) {
    std::map<int, RatFun> col;
    for (const auto& [w, c] : rel.terms()) col[row(w)] = c;
    solver.add_column(std::move(col), /*integral=*/false);
  }
  std::map<int, RatFun> rhs;
  for (const auto& [w, c] : target.terms()) rhs[row(w)] = c;
  solver.set_rhs(std::move(rhs));

  auto res = solver.solve(strategy);
  SpanResult out;
  if (res.status != SparseSolver::Status::solved) {
    std::vector<Word> words(row_of.size());
    for (const auto& [w, idx] : row_of) words[idx] = w;
    for (const auto& [r, c] : res.residual) out.residual.add_term(words[r], c);
    return out;
  }

  Certificate cert;
  cert.target_id = target_id;
  NCPoly<RatFun> expansion;
  for (size_t j = 0; j < relations.size(); ++j) {
    if (res.x[j].is_zero()) continue;
    cert.relation_part.push_back({relations[j].first, res.x[j]});
    expansion += relations[j].second * res.x[j];
  }
  cert.verified = (expansion == target);
  if (!cert.verified) {
    out.residual = target - expansion;  // solver bug guard; should not happen
    return out;
  }
  out.cert = std::move(cert);
  return out;
}

template <class C>
SpanResult span_membership(const NCPoly<C>& target,
                           const std::vector<std::pair<std::string, NCPoly<C>>>& relations,
                           Pivot strategy = Pivot::min_col_nnz,
                           const std::string& target_id = "target") {
  return span_membership(lift_poly(target), lift_relations(relations), strategy, target_id);
}

struct IdealResult {
  std::optional<Certificate> cert;  // absent means inconclusive at the bound
};

// Bounded two-sided ideal membership: search combinations x * R * y with
// |x| + |y| <= multiplier_degree over a generator alphabet drawn from the
// target and the relations.  Exhausting the bound is inconclusive, never a
// refutation.
inline IdealResult ideal_membership_bounded(
    const NCPoly<RatFun>& target, const std::vector<TaggedRelation>& relations,
    int multiplier_degree, Pivot strategy = Pivot::min_col_nnz,
    const std::string& target_id = "target") {
  std::set<Gen> alphabet;
  for (const auto& [w, c] : target.terms())
    for (const Gen& g : w) alphabet.insert(g);
  for (const auto& [id, rel] : relations)
    for (const auto& [w, c] : rel.terms())
      for (const Gen& g : w) alphabet.insert(g);

  std::vector<Word> mults{Word{}};
  {
    std::vector<Word> frontier{Word{}};
    for (int d = 1; d <= multiplier_degree; ++d) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (const Gen& g : alphabet) {
          Word e = w;
          e.push_back(g);
          next.push_back(e);
        }
      }
      mults.insert(mults.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  std::vector<TaggedRelation> padded;
  for (const auto& [id, rel] : relations) {
    for (const Word& x : mults) {
      for (const Word& y : mults) {
        if (static_cast<int>(x.size() + y.size()) > multiplier_degree) continue;
        NCPoly<RatFun> inst = NCPoly<RatFun>::word(x) * rel * NCPoly<RatFun>::word(y);
        if (inst.is_zero()) continue;
        std::string tag = id;
        if (!x.empty() || !y.empty())
          tag = rttdeg::to_string(x) + "|" + id + "|" + rttdeg::to_string(y);
        padded.emplace_back(std::move(tag), std::move(inst));
      }
    }
  }

  auto span = span_membership(target, padded, strategy, target_id);
  IdealResult out;
  if (span.cert) out.cert = std::move(span.cert);
  return out;
}

}  // namespace rttdeg

#endif
