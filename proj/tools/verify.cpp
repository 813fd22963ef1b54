// Command-line driver: runs a verification suite and emits a
// machine-readable report.  Exit codes: 0 all pass, 1 any fail,
// 2 inconclusive only, 64 usage error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rttdeg/suites.hpp"

using namespace rttdeg;

namespace {

// plain key=value configuration file; command-line flags override
bool apply_config_file(const std::string& path, SuiteConfig& cfg, std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open config file " + path;
    return false;
  }
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    try {
      if (key == "n")
        cfg.N = std::stoi(val);
      else if (key == "case")
        cfg.twcase = val;
      else if (key == "rmax")
        cfg.rmax = std::stoi(val);
      else if (key == "mmax")
        cfg.mmax = std::stoi(val);
      else if (key == "order")
        cfg.order = std::stoi(val);
      else if (key == "jobs")
        cfg.jobs = std::stoi(val);
      else if (key == "seed")
        cfg.seed = std::stoull(val);
      else if (key == "mutate")
        cfg.mutate = (val == "1" || val == "true");
      else if (!key.empty()) {
        err = "unknown config key " + key;
        return false;
      }
    } catch (const std::exception&) {
      err = "bad value for config key " + key;
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for the loop-algebra degenerations"};
  app.footer("suites: ybe rtt-expansion yangian-pbw embed-ytw qloop-classical-limit\n"
             "        rs-identity graded-relation scong twisted-phi separation");

  std::string suite, twcase, format = "json", out_path, config_path;
  SuiteConfig cfg;
  app.add_option("suite", suite, "suite to run")->required();
  auto* on = app.add_option("--n", cfg.N, "matrix size N");
  auto* ocase = app.add_option("--case", twcase, "symmetric-pair case: o, sp or both");
  auto* ormax = app.add_option("--rmax", cfg.rmax, "level cap");
  auto* ommax = app.add_option("--mmax", cfg.mmax, "filtration cap");
  auto* oorder = app.add_option("--order", cfg.order, "series validity order");
  auto* ojobs = app.add_option("--jobs", cfg.jobs, "parallel workers");
  auto* oseed = app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--format", format, "output format: json or md");
  app.add_option("--out", out_path, "write the report to this path");
  app.add_option("--config", config_path, "key=value configuration file");
  auto* omut = app.add_flag("--mutate", cfg.mutate,
                            "negative control: flip one sign in one target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  if (!config_path.empty()) {
    SuiteConfig file_cfg;
    std::string err;
    if (!apply_config_file(config_path, file_cfg, err)) {
      std::cerr << err << "\n";
      return 64;
    }
    // flags given on the command line take precedence over the file
    if (!on->count()) cfg.N = file_cfg.N;
    if (!ocase->count()) cfg.twcase = file_cfg.twcase;
    if (!ormax->count()) cfg.rmax = file_cfg.rmax;
    if (!ommax->count()) cfg.mmax = file_cfg.mmax;
    if (!oorder->count()) cfg.order = file_cfg.order;
    if (!ojobs->count()) cfg.jobs = file_cfg.jobs;
    if (!oseed->count()) cfg.seed = file_cfg.seed;
    if (!omut->count()) cfg.mutate = file_cfg.mutate;
  }
  if (ocase->count()) cfg.twcase = twcase;

  try {
    cfg.validate();
    Report rep = run_suite(suite, cfg);
    std::string text = emit_report(rep, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw IoError("cannot write " + out_path);
      out << text;
    }
    return rep.exit_code();
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const InvalidConfig& e) {
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
