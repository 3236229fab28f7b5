#include "fermat/numutil.hpp"

#include "fermat/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace fermat {

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_to_string(const Int& n) { return n.str(); }

} // namespace fermat

namespace fermat::num {

Int isqrt(const Int& n) {
    if (n < 0) throw OutOfRange("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n && (s + 1) != 0) ++s;
    return s;
}

namespace {

// Bitmask of quadratic residues modulo 64; rejects ~81% of non-squares
// before an isqrt is attempted.
constexpr std::uint64_t square_mask_64() {
    std::uint64_t m = 0;
    for (unsigned i = 0; i < 64; ++i) m |= std::uint64_t{1} << ((i * i) % 64);
    return m;
}
constexpr std::uint64_t kSq64 = square_mask_64();

} // namespace

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    const auto low = static_cast<std::uint64_t>(n & 0xffffffffffffffffULL);
    if (!((kSq64 >> (low & 63)) & 1)) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_square_free(const Int& n) {
    Int m = boost::multiprecision::abs(n);
    if (m == 0) return false;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

namespace {

using boost::multiprecision::powm;

bool miller_rabin_round(const Int& n, const Int& d, unsigned r, const Int& a) {
    Int x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for n < 3.3e24.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin_round(n, d, r, Int(a))) return false;
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    using boost::multiprecision::gcd;
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(boost::multiprecision::abs(x - y), n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor(Int n) {
    n = boost::multiprecision::abs(n);
    if (n == 0) throw ZeroArgument("factor: zero argument");
    std::vector<Int> primes;
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    for (Int p = 7; p <= 100000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, int>> out;
    for (const Int& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

long long valuation_int(Int n, const Int& q) {
    if (n == 0) throw ZeroArgument("valuation_int: zero argument");
    long long v = 0;
    while (n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

long long valuation_rat(const Rat& r, const Int& q) {
    if (r == 0) throw ZeroArgument("valuation_rat: zero argument");
    long long v = 0;
    const Int n = numerator(r), d = denominator(r);
    if (n % q == 0) v = valuation_int(n, q);
    if (d % q == 0) v = -valuation_int(d, q);
    return v;
}

int legendre(Int a, const Int& p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    Int r = pow_mod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
    return boost::multiprecision::powm(mod_pos(base, mod), exp, mod);
}

Int mod_inverse(Int a, const Int& m) {
    // Extended Euclid on (a, m).
    Int old_r = mod_pos(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error("mod_inverse: argument not invertible");
    return mod_pos(old_s, m);
}

std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
    Int a = mod_pos(a_in, p);
    if (p == 2) return a;
    if (a == 0) return Int(0);
    if (legendre(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(a, q, p);
    Int r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        Int i = 0;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
            if (i == m) return std::nullopt;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return r;
}

Int hensel_lift_quadratic(const Int& b, const Int& c, const Int& r0,
                          const Int& q, unsigned k) {
    Int modulus = q;
    Int r = mod_pos(r0, q);
    unsigned have = 1;
    while (have < k) {
        unsigned next = std::min(2 * have, k);
        Int next_mod = modulus;
        for (unsigned i = have; i < next; ++i) next_mod *= q;
        const Int deriv = 2 * r + b;
        const Int f = r * r + b * r + c;
        const Int inv = mod_inverse(deriv, next_mod);
        r = mod_pos(r - f * inv, next_mod);
        modulus = next_mod;
        have = next;
    }
    return r;
}

Int mod_pos(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

long long mod_pos_ll(long long n, long long m) {
    long long r = n % m;
    if (r < 0) r += m;
    return r;
}

} // namespace fermat::num
