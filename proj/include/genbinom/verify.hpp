#ifndef GENBINOM_VERIFY_HPP
#define GENBINOM_VERIFY_HPP

#include <genbinom/genbinom.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace genbinom {

struct VerifyOptions {
    long max_n = 10;
    int workers = 0; // 0 = hardware concurrency
    // Test harness hook: perturb the canonical evaluator at this (n,p,k)
    // inside the core consensus sweep, to exercise the failure path.
    std::optional<std::array<long, 3>> corrupt;
};

struct Failure {
    std::string what;
    std::string lhs;
    std::string rhs;
};

struct SuiteReport {
    std::string name;
    long cases = 0;
    std::vector<Failure> failures;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

// Suite names: core, gf, partition, lemma, conjecture.
// Parameter grids are fixed functions of max_n (see the CLI --help text).
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

int default_workers(); // GENBINOM_WORKERS env var, else hardware concurrency

} // namespace genbinom

#endif // GENBINOM_VERIFY_HPP
