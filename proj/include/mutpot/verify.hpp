#pragma once

// Property suites behind `mutpot verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace mutpot {

struct SuiteOptions {
    std::size_t cases = 0;  // 0: suite default
    std::uint64_t rng_seed = 1;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;  // first few, for the report

    bool ok() const { return passed == total; }
    void record(bool pass, const std::string& what);
};

/// pl, birational, lemma, bmatrix, content, ub, vlemma, identities.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// "all" expands to every suite.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options);

}  // namespace mutpot
