#ifndef RTTDEG_EVALREP_HPP
#define RTTDEG_EVALREP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/qloop.hpp"
#include "rttdeg/report.hpp"

namespace rttdeg {

// Dense square matrix over Q(q); small fixed sizes (N or a tensor power).
class SmallMat {
 public:
  SmallMat() = default;
  explicit SmallMat(int n) : n_(n), a_(n * n) {}
  static SmallMat identity(int n) {
    SmallMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFun(1);
    return m;
  }
  int n() const { return n_; }
  RatFun& at(int r, int c) { return a_[r * n_ + c]; }
  const RatFun& at(int r, int c) const { return a_[r * n_ + c]; }

  friend SmallMat operator+(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.n_);
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend SmallMat operator-(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.n_);
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend SmallMat operator*(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const RatFun& f = a.at(i, k);
        if (f.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          const RatFun& g = b.at(k, j);
          if (g.is_zero()) continue;
          r.at(i, j) += f * g;
        }
      }
    return r;
  }
  SmallMat scaled(const RatFun& s) const {
    SmallMat r(n_);
    for (size_t k = 0; k < a_.size(); ++k)
      if (!a_[k].is_zero()) r.a_[k] = a_[k] * s;
    return r;
  }
  static SmallMat kron(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.n_ * b.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (int k = 0; k < b.n_; ++k)
          for (int l = 0; l < b.n_; ++l) {
            if (b.at(k, l).is_zero()) continue;
            r.at(i * b.n_ + k, j * b.n_ + l) = a.at(i, j) * b.at(k, l);
          }
      }
    return r;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) s += at(i, j).to_string() + (j + 1 < n_ ? ", " : "");
      s += "; ";
    }
    return s;
  }

 private:
  int n_ = 0;
  std::vector<RatFun> a_;
};

// Evaluation representation read off from the trigonometric R-matrix at a
// rational point.  Only levels 0 and 1 act nontrivially.  Correctness is
// established by self-certification against the defining relation families,
// not by trusting the construction.
class EvalRep {
 public:
  EvalRep(int N, Rational point);
  int N() const { return N_; }
  const Rational& point() const { return a_; }

  SmallMat capT(int i, int j, int r) const;
  SmallMat capTb(int i, int j, int r) const;

  // evaluates relation families and the inverse constraints at small levels
  bool self_certify(QLoopCtx& ctx) const;

 private:
  int N_;
  Rational a_;
  std::vector<SmallMat> t0_, t1_, tb0_, tb1_;  // (i-1)*N + (j-1)
};

// Tensor product of evaluation representations under the matrix coproduct.
class TensorRep {
 public:
  explicit TensorRep(std::vector<EvalRep> factors);
  int N() const { return N_; }
  int dim() const { return dim_; }

  SmallMat gen_image(const Gen& g) const;
  SmallMat eval(const QElem& e) const;

 private:
  SmallMat cap_image(Fam fam, int i, int j, int r) const;
  int dim_for_suffix(size_t d) const;

  int N_, dim_;
  std::vector<EvalRep> factors_;
  mutable std::map<std::tuple<int, int, int, int>, SmallMat> cache_;
};

// Evaluate each relation in the representation and assert the zero matrix.
Report rep_check(const TensorRep& rep,
                 const std::vector<std::pair<std::string, QElem>>& relations,
                 bool mutate = false);

}  // namespace rttdeg

#endif
