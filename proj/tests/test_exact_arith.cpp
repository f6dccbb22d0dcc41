#include <doctest.h>

#include "cones/dual_scalar.hpp"
#include "cones/errors.hpp"
#include "cones/linalg.hpp"
#include "cones/rational.hpp"
#include "support/gen.hpp"

using namespace cones;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(rational_from_string("2/4") == rational_from_string("1/2"));
    CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
    CHECK(rational_to_string(rational_from_string("3/-6")) == "-1/2");
    CHECK(rational_to_string(rational_from_string("-7")) == "-7");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(numerator(rational_from_string("10/5")) == 2);
    CHECK(denominator(rational_from_string("10/5")) == 1);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/2"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
}

TEST_CASE("rational field laws on random values") {
    testgen::Rng rng(20240801);
    for (int i = 0; i < 500; ++i) {
        const Rational a = testgen::small_rational(rng);
        const Rational b = testgen::small_rational(rng);
        const Rational c = testgen::small_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
        // round-trip stays canonical
        CHECK(rational_from_string(rational_to_string(a)) == a);
    }
}

TEST_CASE("dual_sign rules") {
    CHECK(dual_sign({Rational(1), Rational(100)}) == 1);
    CHECK(dual_sign({Rational(0), Rational(1)}) == -1);
    CHECK(dual_sign({Rational(0), Rational(0)}) == 0);
    CHECK(dual_sign({Rational(-2), Rational(-5)}) == -1);
    CHECK(dual_sign({Rational(0), Rational(-3)}) == 1);
}

TEST_CASE("dual_sign scales with nonzero factors") {
    testgen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        DualScalar d{testgen::small_rational(rng), testgen::small_rational(rng)};
        Rational t = testgen::small_rational(rng);
        if (t == 0) t = 1;
        DualScalar scaled{t * d.std_part, t * d.inf_part};
        CHECK(dual_sign(scaled) == sign(t) * dual_sign(d));
    }
}

TEST_CASE("kernel_basis on known instances") {
    SUBCASE("single row in R^3") {
        QMatrix m{{Rational(1), Rational(0), Rational(0)}};
        auto basis = kernel_basis(m, 3);
        REQUIRE(basis.size() == 2);
        for (const QVector& v : basis) CHECK(dot(m[0], v) == 0);
    }
    SUBCASE("identity has trivial kernel") {
        QMatrix m;
        for (int i = 0; i < 3; ++i) m.push_back(unit_vector(3, (std::size_t)i));
        CHECK(kernel_basis(m, 3).empty());
    }
    SUBCASE("rank-deficient pair") {
        QMatrix m{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
        auto basis = kernel_basis(m, 2);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0][0] == -basis[0][1]);
        CHECK(!is_zero(basis[0]));
    }
}

TEST_CASE("kernel_basis rank-nullity and exactness on random matrices") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = (std::size_t)testgen::rand_int(rng, 1, 5);
        const std::size_t rows = (std::size_t)testgen::rand_int(rng, 0, 5);
        QMatrix m = testgen::int_matrix(rng, rows, dim);
        auto basis = kernel_basis(m, dim);
        CHECK(rank(m) + basis.size() == dim);
        for (const QVector& v : basis) {
            for (const QVector& row : m) CHECK(dot(row, v) == 0);
        }
        // basis vectors are independent
        CHECK(rank(basis) == basis.size());
    }
}

TEST_CASE("in_span") {
    const QVector e1{Rational(1), Rational(0)};
    const QVector e2{Rational(0), Rational(1)};
    CHECK(in_span({e1}, {Rational(2), Rational(0)}));
    CHECK(!in_span({e1}, e2));
    CHECK(in_span({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}},
                  {Rational(3), Rational(5)}));
    CHECK_THROWS_AS(in_span({e1}, {Rational(1), Rational(0), Rational(0)}),
                    DimensionMismatchError);
}

TEST_CASE("normalize_row scales to coprime integers without flipping sign") {
    QVector row{rational_from_string("2/3"), rational_from_string("-4/3")};
    QVector n = normalize_row(row);
    CHECK(n == QVector{Rational(1), Rational(-2)});
    CHECK(is_zero(normalize_row(zero_vector(3))));
}

TEST_CASE("subspace canonical bases") {
    QMatrix spanning{{Rational(1), Rational(1), Rational(0)},
                     {Rational(2), Rational(2), Rational(0)},
                     {Rational(0), Rational(0), Rational(1)}};
    Subspace s = Subspace::from_spanning(3, spanning);
    CHECK(s.dim() == 2);
    CHECK(s.contains({Rational(3), Rational(3), Rational(-7)}));
    CHECK(!s.contains({Rational(1), Rational(0), Rational(0)}));
    CHECK(Subspace::full(3).includes(s));
    CHECK(s.includes(Subspace::zero(3)));
    // same space from a different spanning set compares equal
    QMatrix other{{Rational(-1), Rational(-1), Rational(4)},
                  {Rational(0), Rational(0), Rational(2)}};
    CHECK(Subspace::from_spanning(3, other) == s);
}
