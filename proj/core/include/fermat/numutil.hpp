#pragma once

#include "fermat/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fermat::num {

/// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);
std::uint64_t isqrt_u64(std::uint64_t n);

/// Exact perfect-square test; fills *root when given and n is a square.
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Square-free test by trial division (n may be negative; |n| is tested).
bool is_square_free(const Int& n);

/// Deterministic Miller-Rabin for 64-bit inputs; probabilistic (but in
/// practice exact) witness set for larger ones.
bool is_prime(const Int& n);

/// Prime factorization as (prime, exponent) pairs sorted by prime,
/// via trial division plus Pollard rho for large cofactors.
std::vector<std::pair<Int, int>> factor(Int n);

/// q-adic valuation of a nonzero integer.
long long valuation_int(Int n, const Int& q);

/// q-adic valuation of a nonzero rational.
long long valuation_rat(const Rat& r, const Int& q);

/// Legendre symbol (a|p) for an odd prime p.
int legendre(Int a, const Int& p);

Int pow_mod(Int base, Int exp, const Int& mod);

/// Inverse of a modulo m (gcd(a, m) = 1).
Int mod_inverse(Int a, const Int& m);

/// Tonelli-Shanks: a square root of a modulo an odd prime p, if one exists.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Lifts a simple root r0 of the monic quadratic x^2 + b*x + c modulo q to a
/// root modulo q^k by Newton iteration. Requires 2*r0 + b invertible mod q.
Int hensel_lift_quadratic(const Int& b, const Int& c, const Int& r0,
                          const Int& q, unsigned k);

/// Positive residue of n modulo m (m > 0).
Int mod_pos(const Int& n, const Int& m);
long long mod_pos_ll(long long n, long long m);

} // namespace fermat::num
