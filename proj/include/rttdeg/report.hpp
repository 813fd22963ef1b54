#ifndef RTTDEG_REPORT_HPP
#define RTTDEG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rttdeg/certificate.hpp"
#include "rttdeg/errors.hpp"

namespace rttdeg {

enum class Verdict { pass, fail, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  std::string params;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;  // counterexample expansion or method note
  std::optional<Certificate> certificate;
  double time_ms = 0.0;
};

struct SuiteConfig {
  int N = 2;
  std::string twcase = "both";  // "o", "sp" or "both"
  int rmax = 4;
  int mmax = 2;
  int order = 6;  // series validity order; must be >= rmax + 2
  int jobs = 1;
  std::uint64_t seed = 0;
  int multiplier_degree = 1;  // bound for ideal-membership searches
  bool mutate = false;        // negative-control mode: flip one sign in one target

  void validate() const {
    if (N < 1) throw InvalidConfig("N must be at least 1");
    if (twcase != "o" && twcase != "sp" && twcase != "both")
      throw InvalidConfig("case must be o, sp or both");
    if ((twcase == "sp" || twcase == "both") && N % 2 != 0 && N > 1)
      throw InvalidConfig("symplectic case needs even N");
    if (order < rmax + 2) throw InvalidConfig("order must be at least rmax + 2");
    if (jobs < 1) throw InvalidConfig("jobs must be positive");
    if (rmax < 0 || mmax < 0 || multiplier_degree < 0)
      throw InvalidConfig("caps must be nonnegative");
  }

  json to_json() const {
    return json{{"n", N},           {"case", twcase}, {"rmax", rmax},
                {"mmax", mmax},     {"order", order}, {"jobs", jobs},
                {"seed", seed},     {"multiplier_degree", multiplier_degree},
                {"mutate", mutate}};
  }
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> checks;

  int count(Verdict v) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.verdict == v) ++n;
    return n;
  }
  bool all_pass() const { return count(Verdict::fail) == 0 && count(Verdict::inconclusive) == 0; }

  // 0 all pass, 1 any fail, 2 inconclusive only
  int exit_code() const {
    if (count(Verdict::fail) > 0) return 1;
    if (count(Verdict::inconclusive) > 0) return 2;
    return 0;
  }

  json to_json() const;
  static Report from_json(const json& j);
  std::string to_markdown() const;
};

std::string emit_report(const Report& r, const std::string& format);

}  // namespace rttdeg

#endif
