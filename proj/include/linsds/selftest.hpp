#pragma once

// Randomized self-verification: every closed form is replayed against the
// sequential-composition reference (and the algebraic cross-checks) on
// seeded instances. Backs the `selftest` CLI command.

#include <cstdint>
#include <string>
#include <vector>

namespace linsds {

struct SelftestReport {
    struct Suite {
        std::string name;
        std::size_t trials = 0;
        std::size_t failures = 0;
        bool passed() const { return failures == 0; }
    };
    std::vector<Suite> suites;

    bool all_passed() const {
        for (const auto& s : suites) {
            if (!s.passed()) return false;
        }
        return true;
    }
};

// `trials` scales every suite; the defaults finish in well under a second.
SelftestReport run_selftest(std::uint64_t seed, std::size_t trials = 25);

} // namespace linsds
