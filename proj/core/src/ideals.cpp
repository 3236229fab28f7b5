#include "fermat/ideals.hpp"

#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"

#include <algorithm>
#include <cassert>

namespace fermat {

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
        case SplitKind::ramified: return "ramified";
    }
    return "?";
}

std::string PrimeIdeal::label() const {
    const std::string qs = q.str();
    switch (kind) {
        case SplitKind::inert:
            return "(" + qs + ")";
        case SplitKind::ramified:
            if (q == 2 && d % 2 != 0) return "(2, 1+sqrt(" + std::to_string(d) + "))";
            return "(" + qs + ", sqrt(" + std::to_string(d) + "))";
        case SplitKind::split:
            if (omega_chart)
                return "(2, w-" + root.str() + ")";
            return "(" + qs + ", sqrt(" + std::to_string(d) + ")-" + root.str() + ")";
    }
    return "?";
}

std::vector<PrimeIdeal> split_prime(const QuadField& field, const Int& q) {
    if (!num::is_prime(q)) throw NotPrime("split_prime: " + q.str() + " is not prime");
    const std::int64_t d = field.d();

    PrimeIdeal base;
    base.q = q;
    base.d = d;

    if (q == 2) {
        const std::int64_t m8 = d % 8;
        if (d % 4 == 2 || d % 4 == 3) {
            base.kind = SplitKind::ramified;
            base.e = 2;
            base.f = 1;
            base.root = d % 2;
            return {base};
        }
        if (m8 == 5) {
            base.kind = SplitKind::inert;
            base.e = 1;
            base.f = 2;
            return {base};
        }
        // d = 1 mod 8: split; identify the two primes by the roots 0 and 1
        // of x^2 - x + (1-d)/4 over F_2.
        base.kind = SplitKind::split;
        base.e = base.f = 1;
        base.omega_chart = true;
        PrimeIdeal other = base;
        base.root = 0;
        other.root = 1;
        return {base, other};
    }

    if (Int(d) % q == 0) {
        base.kind = SplitKind::ramified;
        base.e = 2;
        base.f = 1;
        base.root = 0;
        return {base};
    }

    const int chi = num::legendre(Int(d), q);
    if (chi == -1) {
        base.kind = SplitKind::inert;
        base.e = 1;
        base.f = 2;
        return {base};
    }

    auto r = num::sqrt_mod_prime(Int(d), q);
    assert(r.has_value());
    base.kind = SplitKind::split;
    base.e = base.f = 1;
    base.root = *r;
    PrimeIdeal other = base;
    other.root = q - *r;
    if (other.root < base.root) std::swap(base.root, other.root);
    return {base, other};
}

namespace {

// Valuation of an integral element u + v*theta at a split prime, where theta
// is the chart generator. Lifts the defining root to precision just past the
// norm valuation bound and reads off the q-adic valuation of u + v*root.
long long split_valuation(const PrimeIdeal& P, const Int& u, const Int& v,
                          long long norm_val) {
    if (norm_val == 0) return 0;
    const unsigned k = static_cast<unsigned>(norm_val + 1);
    Int b, c;
    if (P.omega_chart) {
        // x^2 - x + (1-d)/4
        b = -1;
        c = (Int(1) - P.d) / 4;
    } else {
        // x^2 - d
        b = 0;
        c = -Int(P.d);
    }
    const Int root = num::hensel_lift_quadratic(b, c, P.root, P.q, k);
    Int modulus = 1;
    for (unsigned i = 0; i < k; ++i) modulus *= P.q;
    const Int t = num::mod_pos(u + v * root, modulus);
    if (t == 0) return norm_val; // v_P can not exceed the norm bound
    return num::valuation_int(t, P.q);
}

} // namespace

long long valuation(const PrimeIdeal& P, const FieldElem& alpha) {
    if (alpha.is_zero()) throw ZeroArgument("valuation: zero element");
    if (alpha.d() != P.d) throw FieldMismatch("valuation: element from a different field");

    // Clear denominators: alpha = (u + v*sqrt(d)) / n with u, v, n integers.
    const Int xd = denominator(alpha.x()), yd = denominator(alpha.y());
    const Int n = boost::multiprecision::lcm(xd, yd);
    Int u = numerator(alpha.x()) * (n / xd);
    Int v = numerator(alpha.y()) * (n / yd);

    long long den_val = (n % P.q == 0) ? num::valuation_int(n, P.q) * P.e : 0;

    // Norm of the cleared element.
    const Int nrm = u * u - Int(P.d) * v * v;
    const long long nv = (nrm % P.q == 0) ? num::valuation_int(nrm, P.q) : 0;

    long long elem_val = 0;
    switch (P.kind) {
        case SplitKind::inert:
            assert(nv % 2 == 0);
            elem_val = nv / 2;
            break;
        case SplitKind::ramified:
            elem_val = nv;
            break;
        case SplitKind::split: {
            if (P.omega_chart) {
                // u + v*sqrt(d) = (u - v) + 2v * w with w = (1+sqrt(d))/2.
                elem_val = split_valuation(P, u - v, 2 * v, nv);
            } else {
                elem_val = split_valuation(P, u, v, nv);
            }
            break;
        }
    }
    return elem_val - den_val;
}

std::vector<PrimeIdeal> s_k(const QuadField& field) { return split_prime(field, 2); }

std::vector<PrimeIdeal> u_k(const QuadField& field) {
    std::vector<PrimeIdeal> out;
    for (const PrimeIdeal& P : s_k(field)) {
        if (P.v_of_q() % 3 != 0) out.push_back(P);
    }
    return out;
}

std::vector<PrimeIdeal> s_k_prime(const QuadField& field, const FieldElem& A,
                                  const FieldElem& B, const FieldElem& C) {
    if (A.is_zero() || B.is_zero() || C.is_zero())
        throw ZeroCoefficient("s_k_prime: coefficients must be nonzero");
    const FieldElem abc = A * B * C;
    const Rat nrm = abc.norm();
    if (!is_integer(nrm))
        throw ZeroCoefficient("s_k_prime: coefficients must be integral");

    std::vector<PrimeIdeal> out = s_k(field);
    for (const auto& [q, _] : num::factor(numerator(nrm))) {
        if (q == 2) continue;
        for (const PrimeIdeal& P : split_prime(field, q)) {
            if (valuation(P, abc) > 0) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fermat
