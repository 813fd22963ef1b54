#include "rttdeg/report.hpp"

#include <sstream>

namespace rttdeg {

json Report::to_json() const {
  json jchecks = json::array();
  for (const auto& c : checks) {
    json jc{{"name", c.name},
            {"params", c.params},
            {"verdict", verdict_name(c.verdict)},
            {"detail", c.detail},
            {"time_ms", c.time_ms}};
    jc["certificate"] = c.certificate ? c.certificate->to_json() : json(nullptr);
    jchecks.push_back(std::move(jc));
  }
  return json{{"schema_version", 1},
              {"suite", suite},
              {"config", config.to_json()},
              {"checks", jchecks},
              {"summary",
               {{"pass", count(Verdict::pass)},
                {"fail", count(Verdict::fail)},
                {"inconclusive", count(Verdict::inconclusive)}}}};
}

Report Report::from_json(const json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  const json& jc = j.at("config");
  r.config.N = jc.at("n").get<int>();
  r.config.twcase = jc.at("case").get<std::string>();
  r.config.rmax = jc.at("rmax").get<int>();
  r.config.mmax = jc.at("mmax").get<int>();
  r.config.order = jc.at("order").get<int>();
  r.config.jobs = jc.at("jobs").get<int>();
  r.config.seed = jc.at("seed").get<std::uint64_t>();
  r.config.multiplier_degree = jc.at("multiplier_degree").get<int>();
  r.config.mutate = jc.at("mutate").get<bool>();
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.params = c.at("params").get<std::string>();
    std::string v = c.at("verdict").get<std::string>();
    rec.verdict = v == "pass" ? Verdict::pass
                  : v == "fail" ? Verdict::fail
                                : Verdict::inconclusive;
    rec.detail = c.at("detail").get<std::string>();
    rec.time_ms = c.at("time_ms").get<double>();
    if (!c.at("certificate").is_null())
      rec.certificate = Certificate::from_json(c.at("certificate"));
    r.checks.push_back(std::move(rec));
  }
  return r;
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# suite: " << suite << "\n\n";
  os << "| check | params | verdict | detail |\n";
  os << "|---|---|---|---|\n";
  for (const auto& c : checks) {
    std::string detail = c.detail.substr(0, 120);
    os << "| " << c.name << " | " << c.params << " | " << verdict_name(c.verdict)
       << " | " << detail << " |\n";
  }
  os << "\n" << count(Verdict::pass) << " pass, " << count(Verdict::fail) << " fail, "
     << count(Verdict::inconclusive) << " inconclusive\n";
  return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return r.to_json().dump(2) + "\n";
  if (format == "md" || format == "markdown") return r.to_markdown();
  throw InvalidConfig("emit_report: unknown format " + format);
}

}  // namespace rttdeg
