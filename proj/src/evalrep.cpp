#include "rttdeg/evalrep.hpp"

#include <functional>

namespace rttdeg {

EvalRep::EvalRep(int N, Rational point) : N_(N), a_(std::move(point)) {
  if (N < 1) throw InvalidDimension("EvalRep");
  if (a_ == 0) throw InvalidConfig("EvalRep: evaluation point must be nonzero");
  const RatFun qq = RatFun::q_minus_qinv();
  const RatFun av{Rational(a_)};
  t0_.assign(N * N, SmallMat(N));
  t1_.assign(N * N, SmallMat(N));
  tb0_.assign(N * N, SmallMat(N));
  tb1_.assign(N * N, SmallMat(N));
  auto idx = [&](int i, int j) { return (i - 1) * N + (j - 1); };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      SmallMat m0(N), m1(N), b0(N), b1(N);
      if (i == j) {
        for (int y = 1; y <= N; ++y) {
          int d = (y == i) ? 1 : 0;
          m0.at(y - 1, y - 1) = RatFun::qpow(-d);
          m1.at(y - 1, y - 1) = -(av * RatFun::qpow(d));
          b0.at(y - 1, y - 1) = RatFun::qpow(d);
          b1.at(y - 1, y - 1) = -(RatFun::qpow(-d) / av);
        }
      } else if (i > j) {
        m0.at(j - 1, i - 1) = -qq;
        b1.at(j - 1, i - 1) = qq / av;
      } else {
        m1.at(j - 1, i - 1) = -(av * qq);
        b0.at(j - 1, i - 1) = qq;
      }
      t0_[idx(i, j)] = std::move(m0);
      t1_[idx(i, j)] = std::move(m1);
      tb0_[idx(i, j)] = std::move(b0);
      tb1_[idx(i, j)] = std::move(b1);
    }
}

SmallMat EvalRep::capT(int i, int j, int r) const {
  if (r == 0) return t0_[(i - 1) * N_ + (j - 1)];
  if (r == 1) return t1_[(i - 1) * N_ + (j - 1)];
  return SmallMat(N_);
}
SmallMat EvalRep::capTb(int i, int j, int r) const {
  if (r == 0) return tb0_[(i - 1) * N_ + (j - 1)];
  if (r == 1) return tb1_[(i - 1) * N_ + (j - 1)];
  return SmallMat(N_);
}

bool EvalRep::self_certify(QLoopCtx& ctx) const {
  TensorRep rep({*this});
  for (QKind kind : {QKind::TT, QKind::TbTb, QKind::TbT})
    for (int i = 1; i <= N_; ++i)
      for (int j = 1; j <= N_; ++j)
        for (int k = 1; k <= N_; ++k)
          for (int l = 1; l <= N_; ++l)
            for (int r = 0; r <= 2; ++r)
              for (int s = 0; s <= 2; ++s) {
                QElem rel = ctx.relation_raw(kind, i, j, k, l, r, s);
                if (!rep.eval(rel).is_zero()) return false;
              }
  for (int i = 1; i <= N_; ++i) {
    SmallMat fwd = capT(i, i, 0) * capTb(i, i, 0) - SmallMat::identity(N_);
    SmallMat bwd = capTb(i, i, 0) * capT(i, i, 0) - SmallMat::identity(N_);
    if (!fwd.is_zero() || !bwd.is_zero()) return false;
  }
  return true;
}

TensorRep::TensorRep(std::vector<EvalRep> factors)
    : N_(factors.front().N()), factors_(std::move(factors)) {
  dim_ = 1;
  for (size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].N() != N_) throw InvalidDimension("TensorRep: mixed N");
    dim_ *= N_;
  }
}

SmallMat TensorRep::cap_image(Fam fam, int i, int j, int r) const {
  auto key = std::make_tuple(fam == Fam::capT ? 0 : 1, i, j, r);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  // matrix coproduct: sum over internal paths and level compositions
  std::function<SmallMat(size_t, int, int)> build = [&](size_t d, int from,
                                                        int lev) -> SmallMat {
    if (d + 1 == factors_.size()) {
      return fam == Fam::capT ? factors_[d].capT(from, j, lev)
                              : factors_[d].capTb(from, j, lev);
    }
    SmallMat acc(dim_for_suffix(d));
    for (int mid = 1; mid <= N_; ++mid)
      for (int take = 0; take <= lev; ++take) {
        SmallMat head = fam == Fam::capT ? factors_[d].capT(from, mid, take)
                                         : factors_[d].capTb(from, mid, take);
        if (head.is_zero()) continue;
        SmallMat tail = build(d + 1, mid, lev - take);
        if (tail.is_zero()) continue;
        acc = acc + SmallMat::kron(head, tail);
      }
    return acc;
  };
  SmallMat m = build(0, i, r);
  cache_.emplace(key, m);
  return m;
}

int TensorRep::dim_for_suffix(size_t d) const {
  int dim = 1;
  for (size_t k = d; k < factors_.size(); ++k) dim *= N_;
  return dim;
}

SmallMat TensorRep::gen_image(const Gen& g) const {
  const RatFun qq = RatFun::q_minus_qinv();
  switch (g.fam) {
    case Fam::capT: return cap_image(Fam::capT, g.i, g.j, g.level);
    case Fam::capTb: return cap_image(Fam::capTb, g.i, g.j, g.level);
    case Fam::tau: {
      SmallMat m = cap_image(Fam::capT, g.i, g.j, g.level);
      if (g.level == 0 && g.i == g.j) {
        m = m - SmallMat::identity(dim_);
        return m.scaled(RatFun(1) / RatFun(Poly({Rational(-1), Rational(1)})));
      }
      return m.scaled(RatFun(1) / qq);
    }
    case Fam::taub: {
      SmallMat m = cap_image(Fam::capTb, g.i, g.j, g.level);
      if (g.level == 0 && g.i == g.j) {
        m = m - SmallMat::identity(dim_);
        return m.scaled(RatFun(1) / RatFun(Poly({Rational(-1), Rational(1)})));
      }
      return m.scaled(RatFun(1) / qq);
    }
    default:
      throw UnknownAlgebraTag("TensorRep: no image for this family");
  }
}

SmallMat TensorRep::eval(const QElem& e) const {
  SmallMat acc(dim_);
  for (const auto& [w, c] : e.terms()) {
    SmallMat prod = SmallMat::identity(dim_);
    for (const Gen& g : w) prod = prod * gen_image(g);
    acc = acc + prod.scaled(c);
  }
  return acc;
}

Report rep_check(const TensorRep& rep,
                 const std::vector<std::pair<std::string, QElem>>& relations,
                 bool mutate) {
  Report out;
  out.suite = "rep-check";
  bool first = true;
  for (const auto& [id, rel] : relations) {
    QElem r = rel;
    if (mutate && first && !r.is_zero()) {
      auto t = r.terms().begin();
      r += QElem::word(t->first, t->second * RatFun(2));
      first = false;
    }
    CheckRecord rec;
    rec.name = id;
    SmallMat m = rep.eval(r);
    rec.verdict = m.is_zero() ? Verdict::pass : Verdict::fail;
    if (!m.is_zero()) rec.detail = "nonzero matrix: " + m.to_string().substr(0, 160);
    out.checks.push_back(std::move(rec));
  }
  return out;
}

}  // namespace rttdeg
