#pragma once

#include "fermat/quadfield.hpp"
#include "fermat/rational.hpp"

#include <string>
#include <vector>

namespace fermat {

enum class SplitKind { split, inert, ramified };

std::string to_string(SplitKind k);

/// A prime P of O_K above the rational prime q. For split and ramified
/// primes, `root` is the base-precision root identifying P = (q, theta - root)
/// where theta is sqrt(d), or (1+sqrt(d))/2 when q = 2 and d = 1 mod 8
/// (the omega chart; 2-adic square roots of d do not separate the two primes
/// above 2 in the {1, sqrt(d)} chart).
struct PrimeIdeal {
    Int q;
    SplitKind kind = SplitKind::inert;
    int e = 1;
    int f = 2;
    Int root = 0;
    bool omega_chart = false;
    std::int64_t d = 0;

    /// Valuation of the rational prime q at this prime: equals e.
    long long v_of_q() const { return e; }

    std::string label() const;

    bool operator==(const PrimeIdeal& o) const {
        return d == o.d && q == o.q && kind == o.kind && root == o.root;
    }
    bool operator!=(const PrimeIdeal& o) const { return !(*this == o); }
    bool operator<(const PrimeIdeal& o) const {
        if (q != o.q) return q < o.q;
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return root < o.root;
    }
};

/// Factors (q) in O_K: one ideal when q is inert (e=1, f=2) or ramified
/// (e=2, f=1), two when q splits (e=f=1). Throws NotPrime.
std::vector<PrimeIdeal> split_prime(const QuadField& field, const Int& q);

/// Exact P-adic valuation of a nonzero element. Throws ZeroArgument.
long long valuation(const PrimeIdeal& prime, const FieldElem& alpha);

/// S_K: the primes above 2.
std::vector<PrimeIdeal> s_k(const QuadField& field);

/// U_K: the primes P above 2 with 3 not dividing v_P(2).
std::vector<PrimeIdeal> u_k(const QuadField& field);

/// S'_K: the primes above 2 together with the primes P dividing ABC.
/// Throws ZeroCoefficient.
std::vector<PrimeIdeal> s_k_prime(const QuadField& field, const FieldElem& A,
                                  const FieldElem& B, const FieldElem& C);

} // namespace fermat
