#include "fermat/density.hpp"

#include "fermat/criteria.hpp"
#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"
#include "fermat/sunit.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

namespace fermat {

std::int64_t sieve_cap_from_env() {
    if (const char* env = std::getenv("FERMAT_CRITERIA_SIEVE_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return kDefaultSieveCap;
}

SquarefreeSieve squarefree_sieve(std::int64_t x, std::int64_t cap) {
    if (x < 2) throw OutOfRange("squarefree_sieve: x must be >= 2");
    if (cap <= 0) cap = sieve_cap_from_env();
    if (x > cap)
        throw LimitTooLarge("squarefree_sieve: x = " + std::to_string(x) +
                            " exceeds the sieve cap " + std::to_string(cap));

    SquarefreeSieve sv;
    sv.x = x;
    sv.flags.assign(static_cast<std::size_t>(x) + 1, true);
    sv.flags[0] = false;
    sv.flags[1] = false;
    for (std::int64_t q = 2; q * q <= x; ++q) {
        // Composite q with a squared factor contributes nothing new.
        if (!sv.flags[static_cast<std::size_t>(q)]) continue;
        const std::int64_t qq = q * q;
        for (std::int64_t m = qq; m <= x; m += qq)
            sv.flags[static_cast<std::size_t>(m)] = false;
    }
    sv.count = 0;
    for (std::int64_t n = 2; n <= x; ++n)
        if (sv.flags[static_cast<std::size_t>(n)]) ++sv.count;
    return sv;
}

namespace {

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (const auto& [q, _] : num::factor(Int(n))) {
        const auto p = static_cast<std::int64_t>(q);
        result -= result / p;
    }
    return result;
}

} // namespace

ClassCount count_class(std::int64_t x, std::int64_t r, std::int64_t m) {
    if (x < 2) throw OutOfRange("count_class: x must be >= 2");
    if (m < 1) throw OutOfRange("count_class: m must be >= 1");
    const std::int64_t s = std::gcd(r, m);
    if (!num::is_square_free(Int(s)))
        throw HypothesisViolated("count_class: gcd(r, m) = " + std::to_string(s) +
                                 " is not square-free");

    ClassCount cc;
    cc.x = x;
    cc.r = r;
    cc.m = m;

    const SquarefreeSieve sv = squarefree_sieve(x);
    const std::int64_t rr = num::mod_pos_ll(r, m);
    for (std::int64_t d = 2; d <= x; ++d)
        if (sv.is_squarefree(d) && d % m == rr) ++cc.count;

    // Main-term prediction with the undetermined symbol read as N = m; the
    // exact sieve count above is the ground truth and is always reported
    // beside it.
    double denom = static_cast<double>(s) * static_cast<double>(euler_phi(m / s)) *
                   static_cast<double>(m);
    double prod = 1.0;
    if (m > 1) {
        for (const auto& [q, _] : num::factor(Int(m))) {
            const double qd = static_cast<double>(q);
            prod *= 1.0 - 1.0 / (qd * qd);
        }
    }
    denom *= prod;
    const double six_over_pi2 = 6.0 / (std::numbers::pi * std::numbers::pi);
    cc.prediction = static_cast<double>(euler_phi(m)) / denom * six_over_pi2 *
                    static_cast<double>(x);
    return cc;
}

std::string to_string(SolverStatus s) {
    switch (s) {
        case SolverStatus::not_run: return "not_run";
        case SolverStatus::only_irrelevant_found: return "only_irrelevant_found";
        case SolverStatus::relevant_found: return "relevant_found";
        case SolverStatus::generator_not_found: return "generator_not_found";
    }
    return "?";
}

DensityReport density_scan(std::int64_t x, ScanMode mode, int solver_bound,
                           std::int64_t d_cap, bool keep_rows) {
    DensityReport rep;
    rep.x = x;
    rep.mode = mode;
    rep.solver_bound = solver_bound;
    rep.d_cap = d_cap;

    const SquarefreeSieve sv = squarefree_sieve(x);
    rep.total_squarefree = sv.count;
    const double six_over_pi2 = 6.0 / (std::numbers::pi * std::numbers::pi);
    rep.asymptotic_prediction = six_over_pi2 * static_cast<double>(x);

    // Residue classes of the congruence criterion, for the class_counts table.
    const std::vector<std::pair<std::int64_t, std::int64_t>> classes = {
        {3, 8}, {5, 8}, {6, 16}, {10, 16}, {2, 16}, {14, 16}};
    for (const auto& cls : classes) rep.class_counts[cls] = 0;

    std::int64_t seen_sf = 0, seen_match = 0;
    std::int64_t next_checkpoint = 1000;
    for (std::int64_t d = 2; d <= x; ++d) {
        ScanRow row;
        row.d = d;
        row.squarefree = sv.is_squarefree(d);
        if (row.squarefree) {
            ++seen_sf;
            for (const auto& [r, m] : classes)
                if (d % m == r) ++rep.class_counts[{r, m}];
            const LocalCaseMatch match = quadratic_local_criterion(d);
            row.case_matched = match.first_case;
            if (match.matched()) {
                ++seen_match;
                ++rep.criterion_count;
            }
            if (mode == ScanMode::congruence_plus_bounded_solver && d <= d_cap) {
                try {
                    const QuadField field(d);
                    const SUnitSolutionList sols =
                        solve_unit_equation(field, s_k(field), solver_bound);
                    const bool any_relevant =
                        std::any_of(sols.solutions.begin(), sols.solutions.end(),
                                    [](const SUnitSolution& s) {
                                        return s.relevance == Relevance::relevant;
                                    });
                    row.solver_status = any_relevant ? SolverStatus::relevant_found
                                                     : SolverStatus::only_irrelevant_found;
                } catch (const GeneratorNotFound&) {
                    row.solver_status = SolverStatus::generator_not_found;
                }
                if (row.solver_status == SolverStatus::only_irrelevant_found)
                    ++rep.solver_only_irrelevant;
                if (row.solver_status == SolverStatus::relevant_found)
                    ++rep.solver_relevant;
            }
        }
        if (keep_rows) rep.rows.push_back(row);
        if (d == next_checkpoint || d == x) {
            if (seen_sf > 0)
                rep.running.emplace_back(
                    d, static_cast<double>(seen_match) / static_cast<double>(seen_sf));
            next_checkpoint *= 2;
        }
    }

    if (rep.total_squarefree > 0) {
        rep.delta_rel_exact = Rat(rep.criterion_count, rep.total_squarefree);
        rep.delta_rel_estimate = static_cast<double>(rep.criterion_count) /
                                 static_cast<double>(rep.total_squarefree);
    }
    return rep;
}

} // namespace fermat
