#ifndef WEINGARTEN_VERIFY_HPP
#define WEINGARTEN_VERIFY_HPP

#include <string>
#include <vector>

namespace weingarten {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // deterministic: byte-identical across reruns
    std::string info;   // timings and other non-deterministic notes
};

// The numbered acceptance checks (1..11; 12 is the determinism meta-check,
// run by the caller as two passes over the others).
CheckResult acceptance_criterion(int k);
std::vector<CheckResult> acceptance_all(); // criteria 1..11 in order

// Named verification suites exposed by the CLI.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_suite(const std::string& name);

} // namespace weingarten

#endif
