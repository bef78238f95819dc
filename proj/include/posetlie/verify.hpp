#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posetlie {

struct SuiteOptions {
    int max_n = 0;  ///< poset size bound; 0 picks the suite default
    int max = 4;    ///< parameter bound for the Stanley/Konvalinka suite
    int trials = 200;
    std::uint64_t seed = 1;
    int jobs = 0;
};

/// Lines start with PASS, FAIL or NOTE; `passed` is false iff some line failed.
struct SuiteReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what);
    void note(const std::string& what);
    std::string to_text() const;
};

/// duality, recursion, torsion-scan, conjecture, stanley-konvalinka, formulas,
/// incidence, morse, propagation, opposite, union, factorization, pruning,
/// boundary, ucoeff, cup.
const std::vector<std::string>& suite_names();

/// std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace posetlie
