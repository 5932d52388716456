// Acceptance suite: one pass/fail line per criterion. Criterion 12
// (determinism) reruns every other criterion and compares the reports
// byte for byte.

#include <cstdio>
#include <string>
#include <vector>

#include "weingarten/verify.hpp"

int main() {
    using weingarten::CheckResult;

    std::vector<CheckResult> first;
    bool all_pass = true;

    for (int k = 1; k <= 11; ++k) {
        CheckResult r;
        try {
            r = weingarten::acceptance_criterion(k);
        } catch (const std::exception& e) {
            r.name = "criterion " + std::to_string(k);
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        first.push_back(r);
        std::printf("%s criterion-%02d %s\n", r.pass ? "PASS" : "FAIL", k, r.name.c_str());
        std::printf("       %s\n", r.detail.c_str());
        if (!r.info.empty()) std::printf("       (%s)\n", r.info.c_str());
        all_pass = all_pass && r.pass;
        std::fflush(stdout);
    }

    bool deterministic = true;
    std::string mismatch;
    for (int k = 1; k <= 11; ++k) {
        CheckResult r;
        try {
            r = weingarten::acceptance_criterion(k);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const CheckResult& f = first[static_cast<std::size_t>(k - 1)];
        if (r.pass != f.pass || r.detail != f.detail) {
            deterministic = false;
            mismatch += " criterion-" + std::to_string(k);
        }
    }
    std::printf("%s criterion-12 repeated runs produce byte-identical reports%s\n",
                deterministic ? "PASS" : "FAIL", mismatch.c_str());
    all_pass = all_pass && deterministic;

    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present");
    return all_pass ? 0 : 1;
}
