#pragma once

#include "fermat/ideals.hpp"
#include "fermat/quadfield.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fermat {

/// Invariants of the curve y^2 = x(x - A a^p)(x + B b^p) attached to a
/// solution of A x^p + B y^p + C z^p = 0:
///   c4    = 2^4 (A^2 a^{2p} - B C b^p c^p)
///   delta = 2^4 A^2 B^2 C^2 (a b c)^{2p}
///   j     = c4^3 / delta
struct FreyData {
    FieldElem A, B, C;
    FieldElem a, b, c;
    std::int64_t p = 3;
    FieldElem c4;
    FieldElem delta;
    FieldElem j;
};

/// Computes the invariants, cross-checking the three algebraic forms of c4.
/// Throws NotASolution / TrivialSolution.
FreyData frey_invariants(const FieldElem& A, const FieldElem& B, const FieldElem& C,
                         const FieldElem& a, const FieldElem& b, const FieldElem& c,
                         std::int64_t p);

struct WkCheck {
    bool ok = false;
    std::string reason; // empty when ok
};

/// Membership in W_K: a nontrivial primitive integral solution with
/// v_P(abc) >= 1 for every P above 2.
WkCheck is_in_w_k(const QuadField& field, const FieldElem& A, const FieldElem& B,
                  const FieldElem& C, const FieldElem& a, const FieldElem& b,
                  const FieldElem& c, std::int64_t p);

enum class DivisorCheckStatus { divides_exactly_one, precondition_not_met, violation };

struct DivisorCheckResult {
    DivisorCheckStatus status;
    long long v_a = 0, v_b = 0, v_c = 0;
};

/// For (a,b,c) in W_K and p > max{v_P(A), v_P(B), v_P(C)}, P divides exactly
/// one of a, b, c.
DivisorCheckResult exact_divisor_check(const QuadField& field, const FieldElem& A,
                                       const FieldElem& B, const FieldElem& C,
                                       const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c, std::int64_t p,
                                       const PrimeIdeal& P);

enum class ReductionType {
    good,
    multiplicative,
    potentially_multiplicative,
    additive_potentially_good
};

std::string to_string(ReductionType t);

struct ReductionReport {
    PrimeIdeal prime;
    long long v_delta = 0;
    std::optional<long long> v_c4; // empty when c4 = 0
    std::optional<long long> v_j;  // empty when j = 0
    ReductionType type = ReductionType::good;
    bool p_divides_v_delta = false;
    bool three_divides_v_delta = false;
    std::optional<bool> p_divides_v_j;
    long long conductor_exponent_bound = 0;
    bool in_s_prime = false;
    bool in_gcd_support = false;
    // Exponent threshold of the potential-multiplicativity statement at
    // primes above 2: p must exceed
    //   max{ v(ABC), |8 v(2) + v(A)+v(B)-2v(C)| / 2, (two symmetric terms) }.
    // Stored doubled so the comparison stays integral; below the threshold
    // the classification abstains (threshold_met = false).
    long long threshold_x2 = 0;
    bool threshold_met = false;
};

/// Valuation-level reduction classification of the Frey curve at one prime.
ReductionReport classify_reduction(const FreyData& fd, const PrimeIdeal& P);

/// The S3-orbit {lambda, 1/lambda, 1-lambda, 1/(1-lambda), lambda/(lambda-1),
/// (lambda-1)/lambda}, with duplicates collapsed. Throws DegenerateLambda
/// for lambda in {0, 1}.
std::vector<FieldElem> lambda_orbit(const FieldElem& lambda);

/// j = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (1 - lambda)^2).
FieldElem j_from_lambda(const FieldElem& lambda);

/// j = 2^8 (1 - lambda mu)^3 / (lambda mu)^2 for mu = 1 - lambda.
FieldElem j_from_lambda_mu(const FieldElem& lambda, const FieldElem& mu);

/// The degree-6 polynomial in mu whose roots form the fiber of the j-map
/// over j0: 2^8 (mu^2 - mu + 1)^3 - j0 mu^2 (mu - 1)^2.
struct JFiberPolynomial {
    std::array<FieldElem, 7> coeff; // coeff[i] multiplies mu^i
    FieldElem eval(const FieldElem& mu) const;
};

JFiberPolynomial j_collision_degree(const FieldElem& j0);

/// Scales a nontrivial triple in K^3 to an integral one and removes the
/// largest principal common divisor found by bounded generator search.
/// Throws NonPrincipalGcd when a nontrivial gcd ideal resists removal
/// (possible only for class number > 1).
std::tuple<FieldElem, FieldElem, FieldElem> scale_to_integral(
    const QuadField& field, const FieldElem& a, const FieldElem& b, const FieldElem& c,
    std::int64_t height_bound = 1'000'000);

/// Primes P with min(v_P(a), v_P(b), v_P(c)) > 0, with that minimum.
std::vector<std::pair<PrimeIdeal, long long>> gcd_support(const QuadField& field,
                                                          const FieldElem& a,
                                                          const FieldElem& b,
                                                          const FieldElem& c);

} // namespace fermat
