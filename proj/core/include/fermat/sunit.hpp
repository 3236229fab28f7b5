#pragma once

#include "fermat/ideals.hpp"
#include "fermat/quadfield.hpp"
#include "fermat/units.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

inline constexpr int kDefaultExponentBound = 10;
inline constexpr std::int64_t kDefaultHeightBound = 1'000'000;

/// An integral generator pi of P^k, with k minimal such that P^k is principal.
struct PrimePower {
    PrimeIdeal prime;
    FieldElem generator;
    int power = 1;
};

/// Concrete generators for the S-unit group: torsion {±1}, the fundamental
/// unit, one prime-power generator per P in S, and auxiliary rational primes
/// q needed when both primes above a split q lie in S but P*Pbar = (q) is not
/// in the lattice spanned by the per-prime generators (class number > 1).
struct SGenerators {
    FundamentalUnit eps;
    std::vector<PrimePower> pi_list;
    std::vector<FieldElem> aux;
};

SGenerators s_generators(const QuadField& field, const std::vector<PrimeIdeal>& s_set,
                         std::int64_t height_bound = kDefaultHeightBound);

enum class Relevance { irrelevant, relevant };

std::string to_string(Relevance r);

/// A solution (lambda, mu) of lambda + mu = 1 in S-units, with the valuation
/// record at every P in S.
struct SUnitSolution {
    FieldElem lambda;
    FieldElem mu;
    std::map<PrimeIdeal, std::pair<long long, long long>> valuations;
    Relevance relevance = Relevance::relevant;
};

struct SUnitSolutionList {
    std::vector<SUnitSolution> solutions;
    bool bounded = true;
    int exponent_bound = 0;
    std::vector<PrimeIdeal> s_set;
};

/// Bounded search for solutions of lambda + mu = 1 in S-units: lambda ranges
/// over ±eps^a * prod pi^b with all exponents in [-bound, bound], mu = 1 -
/// lambda is tested for the S-unit property. A semi-decision procedure: the
/// result is complete only within the exponent box (bounded = true always).
SUnitSolutionList solve_unit_equation(const QuadField& field,
                                      const std::vector<PrimeIdeal>& s_set, int bound,
                                      std::int64_t height_bound = kDefaultHeightBound);

/// Exact membership test against {(2,-1), (-1,2), (1/2,1/2)}.
Relevance classify(const SUnitSolution& sol);

/// Condition max{|v_P(lambda)|, |v_P(mu)|} <= 4 v_P(2).
bool check_condition_23(const SUnitSolution& sol, const PrimeIdeal& P);

/// Condition (2.3) together with v_P(lambda*mu) = v_P(2) mod 3.
bool check_condition_25(const SUnitSolution& sol, const PrimeIdeal& P);

/// Builds a solution record (valuations at s_set + relevance) from a pair.
SUnitSolution make_solution(const FieldElem& lambda, const FieldElem& mu,
                            const std::vector<PrimeIdeal>& s_set);

/// True iff every valuation of alpha outside s_set vanishes.
bool is_s_unit(const QuadField& field, const FieldElem& alpha,
               const std::vector<PrimeIdeal>& s_set);

} // namespace fermat
