#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/criteria.hpp"
#include "fermat/density.hpp"
#include "fermat/errors.hpp"

#include "oracles.hpp"

#include <cstdlib>

using namespace fermat;

TEST_CASE("square-free sieve") {
    const SquarefreeSieve sv = squarefree_sieve(10);
    CHECK(sv.count == 6); // {2, 3, 5, 6, 7, 10}
    for (std::int64_t d : {2, 3, 5, 6, 7, 10}) CHECK(sv.is_squarefree(d));
    for (std::int64_t d : {4, 8, 9}) CHECK_FALSE(sv.is_squarefree(d));
    CHECK_FALSE(sv.is_squarefree(1));

    CHECK(squarefree_sieve(100).count == 60);
    CHECK(squarefree_sieve(2).count == 1);
    CHECK_THROWS_AS(squarefree_sieve(1), OutOfRange);
}

TEST_CASE("sieve agrees with trial division up to 3000") {
    const SquarefreeSieve sv = squarefree_sieve(3000);
    for (std::int64_t d = 2; d <= 3000; ++d)
        CHECK(sv.is_squarefree(d) == oracles::squarefree_trial(d));
}

TEST_CASE("sieve cap") {
    CHECK_THROWS_AS(squarefree_sieve(1000, 100), LimitTooLarge);
    setenv("FERMAT_CRITERIA_SIEVE_CAP", "50", 1);
    CHECK(sieve_cap_from_env() == 50);
    CHECK_THROWS_AS(squarefree_sieve(1000), LimitTooLarge);
    unsetenv("FERMAT_CRITERIA_SIEVE_CAP");
    CHECK(sieve_cap_from_env() == kDefaultSieveCap);
    CHECK_NOTHROW(squarefree_sieve(1000));
}

TEST_CASE("residue class counts and the main-term prediction") {
    // r = 0, m = 1 reproduces the square-free main term (6/pi^2) x.
    const ClassCount all = count_class(100000, 0, 1);
    CHECK(all.count == 60793);
    CHECK(all.prediction == doctest::Approx(60792.7).epsilon(1e-4));

    const ClassCount c38 = count_class(100000, 3, 8);
    CHECK(c38.count == 10131);
    // Prediction with N = m collapses to x / pi^2 here.
    CHECK(c38.prediction == doctest::Approx(100000.0 / (3.14159265358979 * 3.14159265358979))
                                .epsilon(1e-6));
    CHECK(std::abs(static_cast<double>(c38.count) - c38.prediction) / c38.prediction < 0.01);

    CHECK_THROWS_AS(count_class(1000, 4, 8), HypothesisViolated);
}

TEST_CASE("class counts over a full residue system sum to the total") {
    // m = 6 keeps every gcd(r, m) square-free, so the hypothesis holds for
    // all residues.
    const std::int64_t x = 20000, m = 6;
    const std::int64_t total = squarefree_sieve(x).count;
    std::int64_t sum = 0;
    for (std::int64_t r = 0; r < m; ++r) sum += count_class(x, r, m).count;
    CHECK(sum == total);
}

TEST_CASE("density scan in congruence mode") {
    const DensityReport rep = density_scan(2000, ScanMode::congruence_only, 0, 0, true);
    CHECK(rep.total_squarefree == squarefree_sieve(2000).count);
    REQUIRE(rep.rows.size() == 1999);

    std::int64_t recount = 0;
    for (const ScanRow& row : rep.rows) {
        CHECK(row.squarefree == oracles::squarefree_trial(row.d));
        if (!row.squarefree) {
            CHECK(row.case_matched == 0);
            continue;
        }
        const auto match = quadratic_local_criterion(row.d);
        CHECK(row.case_matched == match.first_case);
        if (row.case_matched != 0) ++recount;
        CHECK(row.solver_status == SolverStatus::not_run);
    }
    CHECK(recount == rep.criterion_count);
    CHECK(rep.delta_rel_exact == Rat(rep.criterion_count, rep.total_squarefree));
    REQUIRE(!rep.running.empty());
    CHECK(rep.running.back().first == 2000);
}

TEST_CASE("density scan with the bounded solver") {
    const DensityReport rep =
        density_scan(60, ScanMode::congruence_plus_bounded_solver, 8, 60, true);
    for (const ScanRow& row : rep.rows) {
        if (!row.squarefree) continue;
        CHECK(row.solver_status != SolverStatus::not_run);
        // Congruence cases 1-2 with d > 6 only ever see irrelevant solutions.
        if (row.d > 6 && (row.case_matched == 1 || row.case_matched == 2))
            CHECK(row.solver_status == SolverStatus::only_irrelevant_found);
        // The small-field exceptions show up as relevant.
        if (row.d == 3 || row.d == 5)
            CHECK(row.solver_status == SolverStatus::relevant_found);
    }
    CHECK(rep.solver_only_irrelevant + rep.solver_relevant > 0);
}

TEST_CASE("single-point report") {
    const DensityReport rep = density_scan(2, ScanMode::congruence_only, 0, 0, true);
    CHECK(rep.total_squarefree == 1);
    CHECK(rep.criterion_count == 0); // d = 2 matches no case
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].d == 2);
}
