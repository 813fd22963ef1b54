#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "rttdeg/suites.hpp"

using namespace rttdeg;

TEST_CASE("report json round trip") {
  SuiteConfig cfg;
  cfg.N = 1;
  Report rep = run_suite("ybe", cfg);
  json j = rep.to_json();
  CHECK(j.at("schema_version").get<int>() == 1);
  Report back = Report::from_json(j);
  CHECK(back.suite == rep.suite);
  CHECK(back.checks.size() == rep.checks.size());
  for (size_t k = 0; k < back.checks.size(); ++k) {
    CHECK(back.checks[k].name == rep.checks[k].name);
    CHECK(back.checks[k].verdict == rep.checks[k].verdict);
  }
  CHECK(back.to_json() == j);
}

TEST_CASE("reports are deterministic") {
  SuiteConfig cfg;
  cfg.N = 2;
  cfg.mmax = 1;
  Report a = run_suite("separation", cfg);
  Report b = run_suite("separation", cfg);
  // strip wall times, compare everything else
  json ja = a.to_json(), jb = b.to_json();
  for (auto& c : ja["checks"]) c.erase("time_ms");
  for (auto& c : jb["checks"]) c.erase("time_ms");
  CHECK(ja == jb);
}

TEST_CASE("exit codes") {
  SuiteConfig cfg;
  cfg.N = 2;
  Report rep = run_suite("ybe", cfg);
  CHECK(rep.exit_code() == 0);
  Report neg;
  neg.checks.push_back({"a", "", Verdict::pass, "", std::nullopt, 0});
  neg.checks.push_back({"b", "", Verdict::inconclusive, "", std::nullopt, 0});
  CHECK(neg.exit_code() == 2);
  neg.checks.push_back({"c", "", Verdict::fail, "", std::nullopt, 0});
  CHECK(neg.exit_code() == 1);
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.N = 0;
  CHECK_THROWS_AS(run_suite("ybe", cfg), InvalidConfig);
  cfg.N = 2;
  cfg.order = 3;  // below rmax + 2
  CHECK_THROWS_AS(run_suite("ybe", cfg), InvalidConfig);
  cfg = SuiteConfig{};
  cfg.twcase = "sp";
  cfg.N = 3;
  CHECK_THROWS_AS(run_suite("embed-ytw", cfg), InvalidConfig);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}), UnknownSuite);
}

TEST_CASE("markdown emission") {
  SuiteConfig cfg;
  cfg.N = 1;
  Report rep = run_suite("ybe", cfg);
  std::string md = emit_report(rep, "md");
  CHECK(md.find("| check |") != std::string::npos);
  CHECK(md.find("ybe") != std::string::npos);
  CHECK_THROWS_AS(emit_report(rep, "yaml"), InvalidConfig);
}

TEST_CASE("parallel execution matches serial") {
  SuiteConfig serial;
  serial.N = 2;
  serial.mmax = 1;
  SuiteConfig parallel = serial;
  parallel.jobs = 4;
  json ja = run_suite("rs-identity", serial).to_json();
  json jb = run_suite("rs-identity", parallel).to_json();
  for (auto& c : ja["checks"]) c.erase("time_ms");
  for (auto& c : jb["checks"]) c.erase("time_ms");
  ja["config"].erase("jobs");
  jb["config"].erase("jobs");
  CHECK(ja == jb);
}

TEST_CASE("binary usage errors") {
  const char* bin = std::getenv("RTTDEG_VERIFY_BIN");
  if (!bin) return;  // only run when ctest provides the binary path
  std::string base(bin);
  auto run = [&](const std::string& args) {
    return std::system((base + " " + args + " >/dev/null 2>&1").c_str()) >> 8;
  };
  CHECK(run("no-such-suite") == 64);
  CHECK(run("ybe --n 0") == 64);
  CHECK(run("ybe --n 1") == 0);
}
