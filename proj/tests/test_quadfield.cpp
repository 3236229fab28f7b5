#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/errors.hpp"
#include "fermat/quadfield.hpp"

#include "oracles.hpp"

using namespace fermat;

TEST_CASE("field construction") {
    const QuadField f5 = make_field(5);
    CHECK(f5.disc() == 5);
    CHECK(f5.half_integral_basis());
    CHECK(f5.integral_basis_desc() == "{1, (1+sqrt(5))/2}");

    const QuadField f3 = make_field(3);
    CHECK(f3.disc() == 12);
    CHECK_FALSE(f3.half_integral_basis());
    CHECK(f3.integral_basis_desc() == "{1, sqrt(3)}");

    CHECK_THROWS_AS(make_field(12), NotSquareFree);
    CHECK_THROWS_AS(make_field(49), NotSquareFree);
    CHECK_THROWS_AS(make_field(1), OutOfRange);
    CHECK_THROWS_AS(make_field(0), OutOfRange);
    CHECK_THROWS_AS(make_field(-3), OutOfRange);
}

TEST_CASE("arithmetic examples") {
    const QuadField f2 = make_field(2);
    const FieldElem a = f2.element(1, 1);   // 1 + sqrt(2)
    const FieldElem b = f2.element(-1, 1);  // -1 + sqrt(2)
    CHECK(a * b == f2.one());

    CHECK(f2.from_int(2).inv() == f2.from_rat(Rat(1, 2)));

    const QuadField f7 = make_field(7);
    CHECK(f7.element(3, 1) * f7.element(3, -1) == f7.from_int(2));
}

TEST_CASE("norm, trace, conjugation") {
    const QuadField f2 = make_field(2);
    CHECK(f2.element(1, 1).norm() == -1);

    const QuadField f5 = make_field(5);
    CHECK(f5.element(Rat(1, 2), Rat(1, 2)).trace() == 1);

    const QuadField f3 = make_field(3);
    CHECK(f3.sqrt_d().conj() == -f3.sqrt_d());
}

TEST_CASE("integrality") {
    const QuadField f5 = make_field(5);
    CHECK(f5.element(Rat(1, 2), Rat(1, 2)).is_integral());
    const QuadField f3 = make_field(3);
    CHECK_FALSE(f3.element(Rat(1, 2), Rat(1, 2)).is_integral());
    CHECK(f3.from_int(7).is_integral());
}

TEST_CASE("errors and field mixing") {
    const QuadField f2 = make_field(2), f3 = make_field(3);
    CHECK_THROWS_AS(f2.zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(f2.one() + f3.one(), FieldMismatch);
    CHECK_THROWS_AS(f2.one() / Rat(0), DivisionByZero);
}

TEST_CASE("exact sign under the real embedding") {
    const QuadField f2 = make_field(2);
    CHECK(f2.element(1, 1).is_positive());
    CHECK(f2.element(-1, 1).is_positive());    // sqrt(2) > 1
    CHECK_FALSE(f2.element(-3, 2).is_positive()); // 2 sqrt(2) < 3
    CHECK(f2.element(3, -2).is_positive());
    CHECK_FALSE(f2.zero().is_positive());
}

TEST_CASE("powers") {
    const QuadField f2 = make_field(2);
    const FieldElem eps = f2.element(1, 1);
    CHECK(eps.pow(0) == f2.one());
    CHECK(eps.pow(3) == eps * eps * eps);
    CHECK(eps.pow(-2) * eps.pow(2) == f2.one());
}

TEST_CASE("ring axioms hold exactly on random pairs") {
    oracles::Rng rng(42);
    const QuadField field = make_field(13);
    for (int i = 0; i < 1000; ++i) {
        const FieldElem a = rng.elem(field), b = rng.elem(field);
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a + b).trace() == a.trace() + b.trace());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("integral elements closed under + and *") {
    oracles::Rng rng(43);
    for (std::int64_t d : {2, 5, 17}) {
        const QuadField field = make_field(d);
        for (int i = 0; i < 1000; ++i) {
            const FieldElem a = rng.integral(field), b = rng.integral(field);
            REQUIRE(a.is_integral());
            REQUIRE(b.is_integral());
            CHECK((a + b).is_integral());
            CHECK((a * b).is_integral());
        }
    }
}

TEST_CASE("inverses are exact") {
    oracles::Rng rng(44);
    const QuadField field = make_field(7);
    for (int i = 0; i < 1000; ++i) {
        const FieldElem a = rng.nonzero_elem(field);
        CHECK(a.inv() * a == field.one());
    }
}
