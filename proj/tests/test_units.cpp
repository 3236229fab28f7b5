#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/errors.hpp"
#include "fermat/units.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace fermat;

TEST_CASE("fundamental unit examples") {
    const FundamentalUnit u2 = fundamental_unit(make_field(2));
    CHECK(u2.eps == make_field(2).element(1, 1));
    CHECK(u2.norm_sign == -1);

    const FundamentalUnit u3 = fundamental_unit(make_field(3));
    CHECK(u3.eps == make_field(3).element(2, 1));
    CHECK(u3.norm_sign == 1);

    const FundamentalUnit u5 = fundamental_unit(make_field(5));
    CHECK(u5.eps == make_field(5).element(Rat(1, 2), Rat(1, 2)));
    CHECK(u5.norm_sign == -1);
}

TEST_CASE("fundamental unit matches the brute-force minimal solution, d <= 120") {
    for (std::int64_t d = 2; d <= 120; ++d) {
        if (!oracles::squarefree_trial(d)) continue;
        const QuadField field = make_field(d);
        const FundamentalUnit fu = fundamental_unit(field);
        const oracles::PellSolution pell = oracles::pell_min_solution(d);
        const Rat den = pell.half ? Rat(2) : Rat(1);
        const FieldElem expected =
            field.element(Rat(pell.x) / den, Rat(pell.y) / den);
        CHECK(fu.eps == expected);
        CHECK(fu.norm_sign == pell.norm_sign);
        CHECK(fu.eps.is_integral());
        CHECK(fu.eps.is_positive());
    }
}

TEST_CASE("units_in_box enumerates each unit exactly once") {
    const QuadField f2 = make_field(2);
    const auto box1 = units_in_box(f2, 1);
    std::set<FieldElem> set1(box1.begin(), box1.end());
    REQUIRE(set1.size() == 6);
    CHECK(set1.count(f2.one()) == 1);
    CHECK(set1.count(-f2.one()) == 1);
    CHECK(set1.count(f2.element(1, 1)) == 1);
    CHECK(set1.count(f2.element(-1, -1)) == 1);
    CHECK(set1.count(f2.element(-1, 1)) == 1); // eps^-1 = -conj(eps) at norm -1
    CHECK(set1.count(f2.element(1, -1)) == 1);

    const auto box0 = units_in_box(make_field(3), 0);
    std::set<FieldElem> set0(box0.begin(), box0.end());
    REQUIRE(set0.size() == 2);
    CHECK(set0.count(make_field(3).one()) == 1);

    const auto box2 = units_in_box(make_field(5), 2);
    CHECK(std::set<FieldElem>(box2.begin(), box2.end()).size() == 10);

    CHECK_THROWS_AS(units_in_box(f2, -1), OutOfRange);
}

TEST_CASE("every boxed unit and its inverse are integral of norm +-1") {
    for (std::int64_t d : {2, 3, 5, 17, 35}) {
        const QuadField field = make_field(d);
        for (const FieldElem& u : units_in_box(field, 3)) {
            const Rat n = u.norm();
            CHECK((n == 1 || n == -1));
            CHECK(u.is_integral());
            CHECK(u.inv().is_integral());
        }
    }
}
