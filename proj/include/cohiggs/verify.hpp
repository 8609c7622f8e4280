#pragma once

#include "cohiggs/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cohiggs {

enum class Theorem { det1, det2, det3, det4, lemma1, lemma2, cocycle, integrability };

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);

/// One record of a verification run. status is FAIL for property violations
/// (counted in failures), NOTE for documented observations, MISMATCH for a
/// disagreement with the paper's displayed data (documented, not failed).
struct Finding {
    std::uint64_t trial = 0;
    std::string status;
    std::string input;
    std::string expected;
    std::string actual;
    std::string note;
};

struct VerificationReport {
    Theorem theorem = Theorem::det1;
    int trials = 0;
    int failures = 0;
    std::uint64_t seed = 0;
    std::vector<Finding> findings;

    bool passed() const { return failures == 0; }
};

struct RunOptions {
    int trials = 100;
    std::uint64_t seed = 42;
    long coeff_bound = 9;
    int jobs = 1;  // trials fan out across this many threads
};

/// Runs the suite for one theorem. Deterministic for fixed (theorem,
/// trials, seed, coeff_bound): each trial derives its own generator stream
/// from (seed, trial index) and findings are ordered by trial, so the
/// report is byte-identical regardless of the jobs setting.
VerificationReport run_verification(Theorem t, const RunOptions& opts);

Json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace cohiggs
