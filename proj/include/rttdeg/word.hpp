#ifndef RTTDEG_WORD_HPP
#define RTTDEG_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rttdeg {

// Generator families across the five algebras.  Levels are always concrete
// integers; only loop-algebra generators may carry a negative level (the
// power of the loop parameter).
enum class Fam : uint8_t {
  sym,    // anonymous free symbol (tests)
  yt,     // Yangian generator t_ij^(r)
  capT,   // quantum loop T_ij^(r), pre A-form rewrite
  capTb,  // quantum loop Tbar_ij^(r)
  tau,    // A-form generator tau_ij^(r)
  taub,   // A-form generator taubar_ij^(r)
  ys,     // twisted Yangian generator s_ij^(r)
  capS,   // twisted quantum loop generator S_ij^(r)
  loopE,  // loop algebra basis element E_ij s^level
};

inline const char* fam_name(Fam f) {
  switch (f) {
    case Fam::sym: return "x";
    case Fam::yt: return "t";
    case Fam::capT: return "T";
    case Fam::capTb: return "Tb";
    case Fam::tau: return "tau";
    case Fam::taub: return "taub";
    case Fam::ys: return "s";
    case Fam::capS: return "S";
    case Fam::loopE: return "E";
  }
  return "?";
}

struct Gen {
  Fam fam;
  int16_t i = 1, j = 1;
  int32_t level = 0;

  // Canonical generator order: family, then level, then row, then column.
  // Restricted to a single family this is the PBW order (level, i, j).
  friend std::strong_ordering operator<=>(const Gen& a, const Gen& b) {
    if (a.fam != b.fam) return a.fam <=> b.fam;
    if (a.level != b.level) return a.level <=> b.level;
    if (a.i != b.i) return a.i <=> b.i;
    return a.j <=> b.j;
  }
  friend bool operator==(const Gen&, const Gen&) = default;

  std::string to_string() const {
    std::string s = fam_name(fam);
    if (fam == Fam::sym) return s + std::to_string(i);
    s += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    if (fam == Fam::loopE) {
      if (level != 0) s += "s^" + std::to_string(level);
    } else {
      s += "^(" + std::to_string(level) + ")";
    }
    return s;
  }
};

using Word = std::vector<Gen>;

// Words ordered by length, then lexicographically on generator keys.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
      auto c = a[k] <=> b[k];
      if (c != 0) return c < 0;
    }
    return false;
  }
};

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ".";
    s += w[k].to_string();
  }
  return s;
}

inline bool word_sorted(const Word& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k] < w[k - 1]) return false;
  return true;
}

}  // namespace rttdeg

#endif
