#pragma once

#include "fermat/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

/// Default memory cap for the square-free sieve; overridable through the
/// FERMAT_CRITERIA_SIEVE_CAP environment variable or an explicit argument.
inline constexpr std::int64_t kDefaultSieveCap = 100'000'000;

std::int64_t sieve_cap_from_env();

struct SquarefreeSieve {
    std::int64_t x = 0;
    std::vector<bool> flags; // flags[n] for 0 <= n <= x; set iff n >= 2 square-free
    std::int64_t count = 0;  // number of square-free d in [2, x]

    bool is_squarefree(std::int64_t n) const { return flags[static_cast<std::size_t>(n)]; }
};

/// Throws LimitTooLarge when x exceeds the cap, OutOfRange when x < 2.
SquarefreeSieve squarefree_sieve(std::int64_t x, std::int64_t cap = 0);

struct ClassCount {
    std::int64_t x = 0;
    std::int64_t r = 0, m = 0;
    std::int64_t count = 0;     // exact sieve count of square-free d = r (mod m), d <= x
    double prediction = 0.0;    // phi(m) / (s phi(m/s) N prod(1-q^-2)) * (6/pi^2) x, N = m
};

/// Throws HypothesisViolated when gcd(r, m) is not square-free.
ClassCount count_class(std::int64_t x, std::int64_t r, std::int64_t m);

enum class ScanMode { congruence_only, congruence_plus_bounded_solver };

enum class SolverStatus { not_run, only_irrelevant_found, relevant_found, generator_not_found };

std::string to_string(SolverStatus s);

struct ScanRow {
    std::int64_t d = 0;
    bool squarefree = false;
    int case_matched = 0; // 0 when none
    SolverStatus solver_status = SolverStatus::not_run;
};

struct DensityReport {
    std::int64_t x = 0;
    ScanMode mode = ScanMode::congruence_only;
    int solver_bound = 0;
    std::int64_t d_cap = 0;
    std::int64_t total_squarefree = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> class_counts;
    std::int64_t criterion_count = 0;
    Rat delta_rel_exact;
    double delta_rel_estimate = 0.0;
    double asymptotic_prediction = 0.0; // (6/pi^2) x, the square-free main term
    std::vector<std::pair<std::int64_t, double>> running; // (x_i, estimate)
    std::vector<ScanRow> rows; // retained when keep_rows
    std::int64_t solver_only_irrelevant = 0;
    std::int64_t solver_relevant = 0;
};

/// Classifies every square-free d <= x by the congruence-class criterion;
/// in solver mode additionally runs the bounded S-unit search for d <= d_cap.
DensityReport density_scan(std::int64_t x, ScanMode mode, int solver_bound = 8,
                           std::int64_t d_cap = 0, bool keep_rows = false);

} // namespace fermat
