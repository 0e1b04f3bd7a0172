#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cyclopair {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t uniqueness_limit = 1000; // criterion 2/3 prime bound
    std::uint64_t mod_p2_limit = 300;      // criterion 4 prime bound
    unsigned threads = 1;
};

// Runs the full verification suite, streaming one line per criterion to
// the sink.  Returns true iff every criterion passed.
bool verify_all(const VerifyOptions& opts,
                const std::function<void(const CriterionResult&)>& sink);

} // namespace cyclopair
