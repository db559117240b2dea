#pragma once

// Sweeps over the identities the library is built to confirm. A suite is a
// sorted list of labeled checks; the checks fan out over worker threads and
// the report is assembled in list order, so the reported failing instance is
// always the first one in that order.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "genkron/series.hpp"

namespace genkron {

struct Check {
    std::string label;
    std::function<bool()> run;
};

struct SuiteReport {
    std::string suite;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure; // label of the minimal failing check, empty when none
    bool passed() const { return failures == 0; }
};

enum class Execution { serial, parallel };

/// Runs every check; a check that throws counts as a failure.
SuiteReport run_checks(std::string suite, const std::vector<Check>& checks, Execution exec = Execution::parallel);

struct VerifyBounds {
    int max_n = 25;          // generalized-formula sweep
    int max_m = 40;          // Kronecker specialization
    int lemma_max_n = 30;
    int series_max_n = 8;
    int trunc = 10;          // Laurent corpus truncation
    int cases = 200;         // randomized corpus size
    int theorem4_max_p = 14;
    std::uint64_t seed = 0x5eed;
};

std::vector<Check> known_value_checks();
std::vector<Check> generalized_checks(int max_n);
std::vector<Check> kronecker_checks(int max_m);
std::vector<Check> lemma_checks(int max_n);
std::vector<Check> series_checks(int max_n);
std::vector<Check> muhat_checks(int trunc, int cases, std::uint64_t seed);
std::vector<Check> theorem4_checks(int max_p);
std::vector<Check> property_checks(int cases, std::uint64_t seed);

const std::vector<std::string>& suite_names();

/// Runs one named suite; throws PreconditionError for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyBounds& bounds, Execution exec = Execution::parallel);

/// Random Laurent polynomial with 1..max_terms terms, exponents in [lo, hi],
/// nonzero integer coefficients in [-9, 9].
LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms, long lo, long hi);

/// Random BiSeries with integer coefficients in [-5, 5].
BiSeries random_biseries(std::mt19937_64& rng, int trunc);

} // namespace genkron
