#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cshuf/qpoly.hpp"
#include "cshuf/theorems.hpp"

namespace cshuf {

// Known theorem selectors: stanley, cyclic, agrr, bijection, counts.
const std::vector<std::string>& all_theorems();

struct SweepConfig {
    int max_total = 8;       // bound on m+n
    int oracle_bound = 7;    // cap for the arrangement-enumeration oracle
    std::vector<std::string> theorems = all_theorems();
    std::optional<int> sample_count;  // when set, sampled pairs at max_total
    std::uint64_t seed = 0;
    std::string output_format = "text";  // json | tsv | text

    // Test hook: perturbs one closed-form cell so the failure path and the
    // exit-status contract stay covered.
    bool inject_failure = false;
};

struct Failure {
    std::string pair;
    std::string theorem;
    int k = 0;  // -1 marks a summed-over-k check
    QPoly expected;  // brute-force side
    QPoly actual;    // closed-form side
    std::string witness;
};

struct TheoremRollup {
    long long cases = 0;
    long long failures = 0;
};

struct VerificationReport {
    SweepConfig config;
    long long cases_checked = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;
    std::map<std::string, TheoremRollup> rollup;

    bool clean() const { return failures.empty(); }
};

// Canonical instance generation: for each split m + n = total, each
// m-subset of {1..total} containing the maximum assigned to csigma, and
// each rotation class on each side. Deterministic lexicographic order.
void enumerate_pairs(int total,
                     const std::function<void(const CyclicShufflePair&)>& fn);

// Linear analogue: every ordered disjoint pair over the letters 1..total,
// including empty operands.
void enumerate_linear_pairs(
    int total,
    const std::function<void(const LinearPerm&, const LinearPerm&)>& fn);

VerificationReport run_sweep(const SweepConfig& config);

std::string report_to_json(const VerificationReport& report);
std::string report_to_tsv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);
std::string render_report(const VerificationReport& report);

int cli_main(int argc, char** argv);

}  // namespace cshuf
