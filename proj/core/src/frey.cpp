#include "fermat/frey.hpp"

#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"
#include "fermat/sunit.hpp"

#include <algorithm>
#include <cassert>

namespace fermat {

std::string to_string(ReductionType t) {
    switch (t) {
        case ReductionType::good: return "good";
        case ReductionType::multiplicative: return "multiplicative";
        case ReductionType::potentially_multiplicative: return "potentially_multiplicative";
        case ReductionType::additive_potentially_good: return "additive_potentially_good";
    }
    return "?";
}

FreyData frey_invariants(const FieldElem& A, const FieldElem& B, const FieldElem& C,
                         const FieldElem& a, const FieldElem& b, const FieldElem& c,
                         std::int64_t p) {
    if (p < 3 || !num::is_prime(Int(p)))
        throw OutOfRange("frey_invariants: exponent must be an odd prime");
    const FieldElem ap = a.pow(p), bp = b.pow(p), cp = c.pow(p);
    if (!(A * ap + B * bp + C * cp).is_zero())
        throw NotASolution("frey_invariants: A a^p + B b^p + C c^p != 0");
    if ((a * b * c).is_zero())
        throw TrivialSolution("frey_invariants: abc = 0");

    const Rat sixteen(16);
    const FieldElem form1 = (A * A * ap * ap - B * C * bp * cp) * sixteen;
    const FieldElem form2 = (B * B * bp * bp - A * C * ap * cp) * sixteen;
    const FieldElem form3 = (C * C * cp * cp - A * B * ap * bp) * sixteen;
    if (form1 != form2 || form2 != form3)
        throw Error("frey_invariants: c4 forms disagree");

    FreyData fd;
    fd.A = A;
    fd.B = B;
    fd.C = C;
    fd.a = a;
    fd.b = b;
    fd.c = c;
    fd.p = p;
    fd.c4 = form1;
    const FieldElem abc = a * b * c;
    fd.delta = (A * A) * (B * B) * (C * C) * abc.pow(2 * p) * sixteen;
    fd.j = fd.c4 * fd.c4 * fd.c4 / fd.delta;
    return fd;
}

std::vector<std::pair<PrimeIdeal, long long>> gcd_support(const QuadField& field,
                                                          const FieldElem& a,
                                                          const FieldElem& b,
                                                          const FieldElem& c) {
    std::vector<std::pair<PrimeIdeal, long long>> out;
    if (a.is_zero() || b.is_zero() || c.is_zero()) return out;
    if (!a.is_integral() || !b.is_integral() || !c.is_integral()) return out;
    using boost::multiprecision::gcd;
    const Int na = numerator(a.norm()), nb = numerator(b.norm()), nc = numerator(c.norm());
    Int g = gcd(gcd(boost::multiprecision::abs(na), boost::multiprecision::abs(nb)),
                boost::multiprecision::abs(nc));
    if (g == 0) return out;
    for (const auto& [q, _] : num::factor(g)) {
        for (const PrimeIdeal& P : split_prime(field, q)) {
            const long long m =
                std::min({valuation(P, a), valuation(P, b), valuation(P, c)});
            if (m > 0) out.emplace_back(P, m);
        }
    }
    return out;
}

WkCheck is_in_w_k(const QuadField& field, const FieldElem& A, const FieldElem& B,
                  const FieldElem& C, const FieldElem& a, const FieldElem& b,
                  const FieldElem& c, std::int64_t p) {
    if ((a * b * c).is_zero()) return {false, "trivial (abc = 0)"};
    if (!a.is_integral() || !b.is_integral() || !c.is_integral())
        return {false, "not integral"};
    if (!(A * a.pow(p) + B * b.pow(p) + C * c.pow(p)).is_zero())
        return {false, "not a solution of the equation"};
    if (!gcd_support(field, a, b, c).empty()) return {false, "not primitive"};
    for (const PrimeIdeal& P : s_k(field)) {
        if (valuation(P, a * b * c) < 1)
            return {false, "v_P(abc) = 0 at " + P.label()};
    }
    return {true, ""};
}

DivisorCheckResult exact_divisor_check(const QuadField& field, const FieldElem& A,
                                       const FieldElem& B, const FieldElem& C,
                                       const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c, std::int64_t p,
                                       const PrimeIdeal& P) {
    DivisorCheckResult res{DivisorCheckStatus::violation, 0, 0, 0};
    const long long vA = valuation(P, A), vB = valuation(P, B), vC = valuation(P, C);
    if (p <= std::max({vA, vB, vC})) {
        res.status = DivisorCheckStatus::precondition_not_met;
        return res;
    }
    if (!is_in_w_k(field, A, B, C, a, b, c, p).ok) {
        res.status = DivisorCheckStatus::violation;
        return res;
    }
    res.v_a = valuation(P, a);
    res.v_b = valuation(P, b);
    res.v_c = valuation(P, c);
    const int positive = (res.v_a > 0) + (res.v_b > 0) + (res.v_c > 0);
    res.status = positive == 1 ? DivisorCheckStatus::divides_exactly_one
                               : DivisorCheckStatus::violation;
    return res;
}

ReductionReport classify_reduction(const FreyData& fd, const PrimeIdeal& P) {
    ReductionReport rep;
    rep.prime = P;
    rep.v_delta = valuation(P, fd.delta);
    if (!fd.c4.is_zero()) rep.v_c4 = valuation(P, fd.c4);
    if (!fd.j.is_zero()) rep.v_j = valuation(P, fd.j);
    if (rep.v_c4 && rep.v_j) assert(*rep.v_j == 3 * *rep.v_c4 - rep.v_delta);

    rep.p_divides_v_delta = rep.v_delta % fd.p == 0;
    rep.three_divides_v_delta = rep.v_delta % 3 == 0;
    if (rep.v_j) rep.p_divides_v_j = (*rep.v_j % fd.p == 0);

    rep.in_s_prime = (P.q == 2) || valuation(P, fd.A * fd.B * fd.C) > 0;
    QuadField field(P.d);
    for (const auto& [Q, m] : gcd_support(field, fd.a, fd.b, fd.c)) {
        if (Q == P) rep.in_gcd_support = true;
    }

    if (!rep.in_s_prime && !rep.in_gcd_support) {
        // Scope of the semi-stability statement: the model is minimal here
        // and reduction is good or multiplicative.
        if (rep.v_delta == 0) {
            rep.type = ReductionType::good;
        } else if (rep.v_c4 && *rep.v_c4 == 0) {
            rep.type = ReductionType::multiplicative;
        } else {
            rep.type = rep.v_j && *rep.v_j < 0 ? ReductionType::potentially_multiplicative
                                               : ReductionType::additive_potentially_good;
        }
    } else if (rep.v_delta == 0) {
        rep.type = ReductionType::good;
    } else {
        rep.type = (rep.v_j && *rep.v_j < 0) ? ReductionType::potentially_multiplicative
                                             : ReductionType::additive_potentially_good;
    }

    if (P.q == 2) {
        rep.conductor_exponent_bound = 2 + 6 * P.e;
    } else if (P.q == 3) {
        rep.conductor_exponent_bound = 2 + 3 * P.e;
    } else {
        rep.conductor_exponent_bound = 2;
    }
    if (rep.type == ReductionType::multiplicative) rep.conductor_exponent_bound = 1;
    if (rep.type == ReductionType::good) rep.conductor_exponent_bound = 0;

    if (P.q == 2) {
        const long long v2 = P.e;
        const long long vA = valuation(P, fd.A), vB = valuation(P, fd.B),
                        vC = valuation(P, fd.C);
        const long long vABC = vA + vB + vC;
        rep.threshold_x2 =
            std::max({2 * vABC, std::abs(8 * v2 + vA + vB - 2 * vC),
                      std::abs(8 * v2 + vB + vC - 2 * vA),
                      std::abs(8 * v2 + vA + vC - 2 * vB)});
        rep.threshold_met = 2 * fd.p > rep.threshold_x2;
    }
    return rep;
}

namespace {

void require_nondegenerate(const FieldElem& lambda) {
    if (lambda.is_zero() || (lambda.is_rational() && lambda.x() == 1))
        throw DegenerateLambda("lambda must avoid {0, 1}");
}

} // namespace

std::vector<FieldElem> lambda_orbit(const FieldElem& lambda) {
    require_nondegenerate(lambda);
    QuadField field(lambda.d());
    const FieldElem one = field.one();
    const FieldElem lm1 = lambda - one;
    std::vector<FieldElem> orbit = {lambda,          lambda.inv(), one - lambda,
                                    (one - lambda).inv(), lambda / lm1, lm1 / lambda};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

FieldElem j_from_lambda(const FieldElem& lambda) {
    require_nondegenerate(lambda);
    QuadField field(lambda.d());
    const FieldElem one = field.one();
    const FieldElem num = lambda * lambda - lambda + one;
    const FieldElem den = lambda * lambda * (one - lambda) * (one - lambda);
    return num * num * num / den * Rat(256);
}

FieldElem j_from_lambda_mu(const FieldElem& lambda, const FieldElem& mu) {
    require_nondegenerate(lambda);
    QuadField field(lambda.d());
    if (lambda + mu != field.one())
        throw DegenerateLambda("j_from_lambda_mu: requires lambda + mu = 1");
    const FieldElem lm = lambda * mu;
    const FieldElem num = field.one() - lm;
    return num * num * num / (lm * lm) * Rat(256);
}

JFiberPolynomial j_collision_degree(const FieldElem& j0) {
    // 2^8 (mu^2 - mu + 1)^3 - j0 mu^2 (mu - 1)^2
    //   = 256 mu^6 - 768 mu^5 + (1536 - j0) mu^4 + (2 j0 - 1792) mu^3
    //     + (1536 - j0) mu^2 - 768 mu + 256.
    QuadField field(j0.d());
    JFiberPolynomial poly{{
        field.from_int(256),
        field.from_int(-768),
        field.from_int(1536) - j0,
        j0 * Rat(2) - field.from_int(1792),
        field.from_int(1536) - j0,
        field.from_int(-768),
        field.from_int(256),
    }};
    return poly;
}

FieldElem JFiberPolynomial::eval(const FieldElem& mu) const {
    FieldElem acc = coeff[6];
    for (int i = 5; i >= 0; --i) acc = acc * mu + coeff[i];
    return acc;
}

namespace {

// Bounded search for an integral generator of the ideal prod P^{m_P}.
std::optional<FieldElem> principal_generator(
    const QuadField& field, const std::vector<std::pair<PrimeIdeal, long long>>& support,
    std::int64_t height_bound) {
    Int target = 1;
    for (const auto& [P, m] : support) {
        for (long long i = 0; i < P.f * m; ++i) target *= P.q;
    }
    const Int d(field.d());
    const bool half = field.half_integral_basis();
    const Int box = half ? 4 * target : target;

    Int dy2 = 0;
    Int step = d;
    for (std::int64_t y = 0; y <= height_bound; ++y) {
        for (int s : {-1, +1}) {
            const Int t = dy2 + s * box;
            Int x;
            if (t >= 0 && num::is_perfect_square(t, &x)) {
                for (int cs : {+1, -1}) {
                    FieldElem cand = half
                                         ? field.element(Rat(x, 2), Rat(cs * y, 2))
                                         : field.element(Rat(x), Rat(cs * y));
                    if (cand.is_zero() || !cand.is_integral()) continue;
                    bool ok = true;
                    for (const auto& [P, m] : support) {
                        if (valuation(P, cand) != m) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) return cand;
                    if (y == 0) break; // conjugate equals the candidate
                }
            }
        }
        dy2 += step;
        step += 2 * d;
    }
    return std::nullopt;
}

} // namespace

std::tuple<FieldElem, FieldElem, FieldElem> scale_to_integral(const QuadField& field,
                                                              const FieldElem& a,
                                                              const FieldElem& b,
                                                              const FieldElem& c,
                                                              std::int64_t height_bound) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw ZeroArgument("scale_to_integral: trivial triple");

    // Clear denominators.
    Int lcm = 1;
    for (const FieldElem* e : {&a, &b, &c}) {
        lcm = boost::multiprecision::lcm(lcm, denominator(e->x()));
        lcm = boost::multiprecision::lcm(lcm, denominator(e->y()));
    }
    FieldElem sa = a * Rat(lcm), sb = b * Rat(lcm), sc = c * Rat(lcm);

    // Remove the principal part of the gcd ideal.
    while (true) {
        auto support = gcd_support(field, sa, sb, sc);
        if (support.empty()) break;
        if (auto g = principal_generator(field, support, height_bound)) {
            sa = sa / *g;
            sb = sb / *g;
            sc = sc / *g;
            continue;
        }
        // Full gcd not principal in bound; peel off per-prime principal powers.
        bool progress = false;
        for (const auto& [P, m] : support) {
            for (long long k = m; k >= 1 && !progress; --k) {
                auto g = principal_generator(field, {{P, k}}, height_bound);
                if (g) {
                    sa = sa / *g;
                    sb = sb / *g;
                    sc = sc / *g;
                    progress = true;
                }
            }
            if (progress) break;
        }
        if (!progress)
            throw NonPrincipalGcd(
                "scale_to_integral: gcd ideal has no principal generator within bound");
    }
    return {sa, sb, sc};
}

} // namespace fermat
