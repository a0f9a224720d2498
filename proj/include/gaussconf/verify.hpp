#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussconf/numeric.hpp"

namespace gaussconf {

struct SuiteCheck {
    std::string name;
    long trials = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::vector<SuiteCheck> checks;
};

// Octonion identity family: Moufang (ab)(ca) = a((bc)a), flexibility,
// the alternative-law chain and Re{b(conj(a)a)c} = Re{(b conj(a))(ac)},
// run on random octonions and cross-checked on level-3 doubling elements.
SuiteReport run_moufang_suite(long trials, std::uint64_t seed);

// Norm composition |ab| = |a||b| for octonions, level-3 doubling elements and
// (products of) paravectors; records the sedenion counterexample, whose
// breakage is the expected outcome.
SuiteReport run_composition_suite(long trials, std::uint64_t seed);

// Sedenion zero-divisor search plus the exact Cl_3 pair
// (1 + e_123)(1 - e_123) = 0.
SuiteReport run_zero_divisor_suite();

// |ab| <= 2^{n/2} |a||b| on general multivectors and associativity of the
// geometric product, Cl_3..Cl_6.
SuiteReport run_pseudo_norm_suite(long trials, std::uint64_t seed);

std::vector<SuiteReport> run_suites(const std::string& suite, long trials, std::uint64_t seed);

std::string suites_to_text(const std::vector<SuiteReport>& reports);
std::string suites_to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                           const std::string& timestamp);

}  // namespace gaussconf
