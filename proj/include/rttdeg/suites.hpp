#ifndef RTTDEG_SUITES_HPP
#define RTTDEG_SUITES_HPP

#include <string>
#include <vector>

#include "rttdeg/report.hpp"

namespace rttdeg {

// Verification suites, one per statement family: ybe, rtt-expansion,
// yangian-pbw, embed-ytw, qloop-classical-limit, rs-identity,
// graded-relation, scong, twisted-phi, separation.
std::vector<std::string> suite_names();

Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace rttdeg

#endif
