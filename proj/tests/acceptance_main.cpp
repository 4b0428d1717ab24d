// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>

#include "heis/verify.hpp"

int main() {
    const auto results = heis::verify::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s criterion %2d %-22s max_err=%.3e tol=%.3e  %s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.max_err, r.tol,
                    r.details.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
