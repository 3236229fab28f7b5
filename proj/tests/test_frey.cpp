#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/errors.hpp"
#include "fermat/frey.hpp"
#include "fermat/sunit.hpp"
#include "fermat/numutil.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace fermat;

namespace {

// Random genuine solution of A a^p + B b^p + C c^p = 0: pick everything but
// C, set c = 1 and solve for C.
struct RandomTuple {
    FieldElem A, B, C, a, b, c;
    std::int64_t p;
};

std::optional<RandomTuple> random_tuple(const QuadField& field, oracles::Rng& rng,
                                        bool integral_abc = true) {
    static const std::int64_t primes[] = {3, 5, 7, 11};
    RandomTuple t{field.zero(), field.zero(), field.zero(),
                  field.zero(), field.zero(), field.one(),
                  primes[static_cast<std::size_t>(rng.uniform(0, 3))]};
    t.A = rng.nonzero_integral(field, 3);
    t.B = rng.nonzero_integral(field, 3);
    t.a = integral_abc ? rng.nonzero_integral(field, 2) : rng.nonzero_elem(field, 2);
    t.b = integral_abc ? rng.nonzero_integral(field, 2) : rng.nonzero_elem(field, 2);
    t.C = -(t.A * t.a.pow(t.p) + t.B * t.b.pow(t.p));
    if (t.C.is_zero()) return std::nullopt;
    return t;
}

} // namespace

TEST_CASE("invariants of known tuples") {
    const QuadField f5 = make_field(5);
    const FreyData fd1 = frey_invariants(f5.one(), f5.one(), f5.from_int(2), f5.one(),
                                         f5.one(), f5.from_int(-1), 3);
    CHECK(fd1.c4 == f5.from_int(48));
    CHECK(fd1.delta == f5.from_int(64));
    CHECK(fd1.j == f5.from_int(1728));

    const QuadField f2 = make_field(2);
    const FreyData fd2 = frey_invariants(f2.one(), f2.from_int(2), f2.from_int(3),
                                         f2.one(), f2.one(), f2.from_int(-1), 5);
    CHECK(fd2.c4 == f2.from_int(112));
    CHECK(fd2.delta == f2.from_int(576));
    CHECK(fd2.j == f2.from_rat(Rat(21952, 9)));

    const FreyData fd3 = frey_invariants(f5.one(), f5.from_int(-4), f5.from_int(-4),
                                         f5.from_int(2), f5.one(), f5.one(), 3);
    CHECK(fd3.delta == f5.from_int(Int(1) << 18));
    CHECK(fd3.j == f5.from_int(1728));
}

TEST_CASE("rejects non-solutions and trivial tuples") {
    const QuadField f5 = make_field(5);
    CHECK_THROWS_AS(frey_invariants(f5.one(), f5.one(), f5.one(), f5.one(), f5.one(),
                                    f5.one(), 3),
                    NotASolution);
    CHECK_THROWS_AS(frey_invariants(f5.one(), f5.one(), f5.from_int(-2), f5.zero(),
                                    f5.zero(), f5.zero(), 3),
                    TrivialSolution);
    CHECK_THROWS_AS(frey_invariants(f5.one(), f5.one(), f5.from_int(-2), f5.one(),
                                    f5.one(), f5.one(), 4),
                    OutOfRange);
}

TEST_CASE("c4 cubed equals j times delta, and the three c4 forms agree") {
    oracles::Rng rng(49);
    int built = 0;
    for (std::int64_t d : {2, 3, 5, 17}) {
        const QuadField field = make_field(d);
        while (built % 50 != 49) {
            auto t = random_tuple(field, rng);
            if (!t) continue;
            const FreyData fd = frey_invariants(t->A, t->B, t->C, t->a, t->b, t->c, t->p);
            CHECK(fd.c4 * fd.c4 * fd.c4 == fd.j * fd.delta);
            ++built;
        }
        ++built;
    }
    CHECK(built >= 200);
}

TEST_CASE("W_K membership") {
    const QuadField f5 = make_field(5);
    const WkCheck ok = is_in_w_k(f5, f5.one(), f5.from_int(-4), f5.from_int(-4),
                                 f5.from_int(2), f5.one(), f5.one(), 3);
    CHECK(ok.ok);
    CHECK(ok.reason.empty());

    const WkCheck trivial = is_in_w_k(f5, f5.one(), f5.one(), f5.from_int(-1), f5.zero(),
                                      f5.one(), f5.one(), 3);
    CHECK_FALSE(trivial.ok);
    CHECK(trivial.reason.find("trivial") != std::string::npos);

    // (2, 2, 2) solves A + B + C = 0 scaled but is not primitive.
    const WkCheck imprim = is_in_w_k(f5, f5.one(), f5.one(), f5.from_int(-2),
                                     f5.from_int(2), f5.from_int(2), f5.from_int(2), 3);
    CHECK_FALSE(imprim.ok);
    CHECK(imprim.reason.find("primitive") != std::string::npos);

    // Solution with abc odd: v_P(abc) = 0 at the prime above 2.
    const WkCheck odd = is_in_w_k(f5, f5.one(), f5.one(), f5.from_int(-2), f5.one(),
                                  f5.one(), f5.one(), 3);
    CHECK_FALSE(odd.ok);
    CHECK(odd.reason.find("v_P(abc)") != std::string::npos);
}

TEST_CASE("exact divisor check") {
    const QuadField f5 = make_field(5);
    const PrimeIdeal P = s_k(f5)[0];
    const auto ok = exact_divisor_check(f5, f5.one(), f5.from_int(-4), f5.from_int(-4),
                                        f5.from_int(2), f5.one(), f5.one(), 3, P);
    CHECK(ok.status == DivisorCheckStatus::divides_exactly_one);
    CHECK(ok.v_a == 1);
    CHECK(ok.v_b == 0);
    CHECK(ok.v_c == 0);

    // p <= v_P(C): the hypothesis fails, which is reported as such.
    const auto pre = exact_divisor_check(f5, f5.one(), f5.from_int(-4), f5.from_int(-16),
                                         f5.from_int(2), f5.one(), f5.one(), 3, P);
    CHECK(pre.status == DivisorCheckStatus::precondition_not_met);

    const auto bad = exact_divisor_check(f5, f5.one(), f5.one(), f5.from_int(-2),
                                         f5.from_int(2), f5.from_int(2), f5.from_int(2),
                                         3, P);
    CHECK(bad.status == DivisorCheckStatus::violation);
}

TEST_CASE("reduction classification at good primes") {
    const QuadField f5 = make_field(5);
    const FreyData fd = frey_invariants(f5.one(), f5.one(), f5.from_int(2), f5.one(),
                                        f5.one(), f5.from_int(-1), 3);
    // delta = 64: good reduction above 3 (inert in Q(sqrt 5)).
    const auto p3 = split_prime(f5, 3);
    REQUIRE(p3.size() == 1);
    const ReductionReport r3 = classify_reduction(fd, p3[0]);
    CHECK(r3.type == ReductionType::good);
    CHECK(r3.v_delta == 0);
    CHECK(r3.conductor_exponent_bound == 0);

    const QuadField f2 = make_field(2);
    const FreyData fd2 = frey_invariants(f2.one(), f2.from_int(2), f2.from_int(3),
                                         f2.one(), f2.one(), f2.from_int(-1), 5);
    for (const PrimeIdeal& q7 : split_prime(f2, 7)) {
        const ReductionReport r7 = classify_reduction(fd2, q7);
        CHECK(r7.type == ReductionType::good); // 7 does not divide 576
    }
}

TEST_CASE("reduction classification above 2 exposes the exponent threshold") {
    const QuadField f5 = make_field(5);
    const FreyData fd = frey_invariants(f5.one(), f5.from_int(-4), f5.from_int(-4),
                                        f5.from_int(2), f5.one(), f5.one(), 3);
    const PrimeIdeal P = s_k(f5)[0];
    const ReductionReport rep = classify_reduction(fd, P);
    REQUIRE(rep.v_j.has_value());
    CHECK(*rep.v_j == 6);
    CHECK(rep.type == ReductionType::additive_potentially_good);
    // threshold: max{2 v(ABC), |8 + v(BCA^-2)|, ...} = 12 > 2p = 6.
    CHECK(rep.threshold_x2 == 12);
    CHECK_FALSE(rep.threshold_met);
    CHECK(rep.in_s_prime);
    CHECK(rep.conductor_exponent_bound == 2 + 6 * P.e);
}

TEST_CASE("multiplicative reduction away from S' has p | v(delta)") {
    oracles::Rng rng(50);
    for (std::int64_t d : {2, 5, 17}) {
        const QuadField field = make_field(d);
        int built = 0;
        while (built < 60) {
            auto t = random_tuple(field, rng);
            if (!t) continue;
            ++built;
            const FreyData fd = frey_invariants(t->A, t->B, t->C, t->a, t->b, t->c, t->p);
            const FieldElem abc_coeff = t->A * t->B * t->C;
            const auto gcd_sup = gcd_support(field, t->a, t->b, t->c);
            for (std::int64_t q = 3; q <= 100; ++q) {
                if (!num::is_prime(Int(q))) continue;
                if (numerator(abc_coeff.norm()) % q == 0) continue;
                for (const PrimeIdeal& P : split_prime(field, q)) {
                    if (std::any_of(gcd_sup.begin(), gcd_sup.end(),
                                    [&](const auto& pm) { return pm.first == P; }))
                        continue;
                    const ReductionReport rep = classify_reduction(fd, P);
                    CHECK_FALSE(rep.in_s_prime);
                    if (rep.v_delta > 0) {
                        REQUIRE(rep.v_c4.has_value());
                        CHECK(*rep.v_c4 == 0);
                        CHECK(rep.p_divides_v_delta);
                        CHECK(rep.type == ReductionType::multiplicative);
                        CHECK(rep.conductor_exponent_bound == 1);
                    } else {
                        CHECK(rep.type == ReductionType::good);
                    }
                }
            }
        }
    }
}

TEST_CASE("above-threshold W_K instances are potentially multiplicative above 2") {
    // a = 2, b = c = 1, C = -(A 2^p + B): a W_K instance for any odd A, B.
    for (std::int64_t d : {3, 5, 17}) {
        const QuadField field = make_field(d);
        for (std::int64_t A : {1, 3}) {
            for (std::int64_t B : {1, 5}) {
                const std::int64_t p = 11;
                const FieldElem fa = field.from_int(2);
                const FieldElem fA = field.from_int(A), fB = field.from_int(B);
                const FieldElem fC = -(fA * fa.pow(p) + fB);
                const FreyData fd = frey_invariants(fA, fB, fC, fa, field.one(),
                                                    field.one(), p);
                REQUIRE(is_in_w_k(field, fA, fB, fC, fa, field.one(), field.one(), p).ok);
                for (const PrimeIdeal& P : s_k(field)) {
                    const ReductionReport rep = classify_reduction(fd, P);
                    CHECK(rep.threshold_met);
                    REQUIRE(rep.v_j.has_value());
                    CHECK(*rep.v_j < 0);
                    REQUIRE(rep.p_divides_v_j.has_value());
                    CHECK_FALSE(*rep.p_divides_v_j);
                    CHECK(rep.type == ReductionType::potentially_multiplicative);
                }
            }
        }
    }
}

TEST_CASE("P does not divide abc: v(delta) identity and the mod-3 escape") {
    // A = 1, B = 3, C = -4, a = b = c = 1 over Q(sqrt 5):
    // v(ABC) = 2 = 2 v(2) mod 3, bounds hold, P does not divide abc.
    const QuadField f5 = make_field(5);
    const PrimeIdeal P = s_k(f5)[0];
    const FreyData fd = frey_invariants(f5.one(), f5.from_int(3), f5.from_int(-4),
                                        f5.one(), f5.one(), f5.one(), 7);
    const ReductionReport rep = classify_reduction(fd, P);
    const long long v2 = P.e;
    const long long vABC = valuation(P, fd.A * fd.B * fd.C);
    CHECK(rep.v_delta == 4 * v2 + 2 * vABC);
    REQUIRE(rep.v_j.has_value());
    CHECK(*rep.v_j >= 0);
    CHECK_FALSE(rep.three_divides_v_delta);
}

TEST_CASE("lambda orbit") {
    const QuadField f5 = make_field(5);
    auto orbit2 = lambda_orbit(f5.from_int(2));
    std::set<FieldElem> set2(orbit2.begin(), orbit2.end());
    CHECK(set2 == std::set<FieldElem>{f5.from_int(2), f5.from_rat(Rat(1, 2)),
                                      f5.from_int(-1)});

    auto orbitm1 = lambda_orbit(f5.from_int(-1));
    CHECK(std::set<FieldElem>(orbitm1.begin(), orbitm1.end()) == set2);

    auto orbit3 = lambda_orbit(f5.from_int(3));
    CHECK(orbit3.size() == 6);
    std::set<FieldElem> set3(orbit3.begin(), orbit3.end());
    CHECK(set3 == std::set<FieldElem>{f5.from_int(3), f5.from_rat(Rat(1, 3)),
                                      f5.from_int(-2), f5.from_rat(Rat(-1, 2)),
                                      f5.from_rat(Rat(3, 2)), f5.from_rat(Rat(2, 3))});

    CHECK_THROWS_AS(lambda_orbit(f5.zero()), DegenerateLambda);
    CHECK_THROWS_AS(lambda_orbit(f5.one()), DegenerateLambda);
}

TEST_CASE("j from lambda") {
    const QuadField f5 = make_field(5);
    CHECK(j_from_lambda(f5.from_int(2)) == f5.from_int(1728));
    CHECK(j_from_lambda(f5.from_rat(Rat(1, 2))) == f5.from_int(1728));
    CHECK(j_from_lambda_mu(f5.from_int(-1), f5.from_int(2)) == f5.from_int(1728));
    CHECK_THROWS_AS(j_from_lambda(f5.one()), DegenerateLambda);
    CHECK_THROWS_AS(j_from_lambda_mu(f5.from_int(2), f5.from_int(2)), DegenerateLambda);
}

TEST_CASE("j is constant on the lambda orbit") {
    oracles::Rng rng(51);
    const QuadField field = make_field(13);
    int tested = 0;
    while (tested < 1000) {
        const FieldElem lambda = rng.elem(field, 6);
        if (lambda.is_zero() || lambda == field.one()) continue;
        ++tested;
        const FieldElem j = j_from_lambda(lambda);
        for (const FieldElem& m : lambda_orbit(lambda)) CHECK(j_from_lambda(m) == j);
        CHECK(j_from_lambda_mu(lambda, field.one() - lambda) == j);
    }
}

TEST_CASE("fiber polynomial of the j map") {
    const QuadField f5 = make_field(5);
    const auto poly0 = j_collision_degree(f5.zero());
    oracles::Rng rng(52);
    for (int i = 0; i < 10; ++i) {
        const FieldElem mu = rng.elem(f5, 5);
        const FieldElem q = mu * mu - mu + f5.one();
        CHECK(poly0.eval(mu) == q * q * q * Rat(256));
    }

    const auto poly1728 = j_collision_degree(f5.from_int(1728));
    CHECK(poly1728.eval(f5.from_int(2)).is_zero());

    const FieldElem j0 = f5.from_int(256);
    const auto poly256 = j_collision_degree(j0);
    for (int i = 0; i < 10; ++i) {
        const FieldElem mu = rng.elem(f5, 5);
        const FieldElem q = mu * mu - mu + f5.one();
        const FieldElem r = mu * (mu - f5.one());
        CHECK(poly256.eval(mu) == q * q * q * Rat(256) - j0 * r * r);
    }
}

TEST_CASE("scaling to integral with principal gcd removed") {
    const QuadField f3 = make_field(3);
    const auto [a1, b1, c1] = scale_to_integral(f3, f3.from_rat(Rat(1, 2)),
                                                f3.from_rat(Rat(1, 3)), f3.one());
    CHECK(a1 == f3.from_int(3));
    CHECK(b1 == f3.from_int(2));
    CHECK(c1 == f3.from_int(6));

    const auto [a2, b2, c2] = scale_to_integral(f3, f3.from_int(2), f3.from_int(4),
                                                f3.from_int(6));
    CHECK(a2 == f3.from_int(1));
    CHECK(b2 == f3.from_int(2));
    CHECK(c2 == f3.from_int(3));

    const QuadField f2 = make_field(2);
    const auto [a3, b3, c3] = scale_to_integral(f2, f2.sqrt_d(), f2.from_int(2),
                                                f2.element(2, 1));
    CHECK(a3 == f2.one());
    CHECK(b3 == f2.sqrt_d());
    CHECK(c3 == f2.element(1, 1));

    CHECK_THROWS_AS(scale_to_integral(f2, f2.zero(), f2.zero(), f2.zero()), ZeroArgument);
}

TEST_CASE("non-principal gcd is detected") {
    // In Q(sqrt 10) the ramified prime above 2 is not principal; a triple
    // with gcd ideal exactly that prime cannot be reduced.
    const QuadField f10 = make_field(10);
    CHECK_THROWS_AS(scale_to_integral(f10, f10.sqrt_d(), f10.from_int(2),
                                      f10.element(2, 1)),
                    NonPrincipalGcd);
}
