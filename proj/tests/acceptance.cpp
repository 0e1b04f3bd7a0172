// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>
#include <thread>

#include "cyclopair/verify.hpp"

int main(int argc, char** argv) {
    cyclopair::VerifyOptions opts;
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
    if (argc > 1) opts.uniqueness_limit = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) opts.mod_p2_limit = std::strtoull(argv[2], nullptr, 10);

    bool ok = cyclopair::verify_all(opts, [](const cyclopair::CriterionResult& r) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " — " << r.detail
                  << std::endl;
    });
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << std::endl;
    return ok ? 0 : 1;
}
