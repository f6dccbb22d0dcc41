#include <doctest.h>

#include "cones/errors.hpp"
#include "cones/fourier_motzkin.hpp"
#include "cones/simplex.hpp"
#include "support/fm_oracle.hpp"
#include "support/gen.hpp"

using namespace cones;

namespace {

QVector qv(std::initializer_list<int> xs) {
    QVector v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

}  // namespace

TEST_CASE("simplex solves small LPs exactly") {
    SUBCASE("bounded optimum") {
        // max x1 + 2*x2 s.t. x1 + x2 <= 4, x1 <= 2, x >= 0  ->  8 at (0,4)
        QMatrix m{qv({1, 1}), qv({1, 0})};
        QVector b{Rational(4), Rational(2)};
        QVector c{Rational(1), Rational(2)};
        auto sol = simplex_maximize(m, b, c);
        REQUIRE(sol.has_value());
        CHECK(sol->value == 8);
        CHECK(sol->point == qv({0, 4}));
    }
    SUBCASE("negative rhs needs phase 1") {
        // max -x1 s.t. -x1 <= -3, x1 <= 5  ->  -3 at x1 = 3
        QMatrix m{qv({-1}), qv({1})};
        QVector b{Rational(-3), Rational(5)};
        QVector c{Rational(-1)};
        auto sol = simplex_maximize(m, b, c);
        REQUIRE(sol.has_value());
        CHECK(sol->value == -3);
    }
    SUBCASE("infeasible") {
        QMatrix m{qv({1}), qv({-1})};
        QVector b{Rational(1), Rational(-2)};  // x <= 1 and x >= 2
        CHECK(!simplex_maximize(m, b, {Rational(1)}).has_value());
    }
}

TEST_CASE("feasible_mixed on known instances") {
    SUBCASE("quadrant minus origin") {
        HomSystem s{2, {qv({1, 0}), qv({0, 1})}, {qv({1, 1})}};
        auto w = feasible_mixed(s);
        REQUIRE(w.has_value());
        CHECK(s.satisfied_by(*w));
    }
    SUBCASE("contradictory strict rows") {
        HomSystem s{1, {}, {qv({1}), qv({-1})}};
        CHECK(!feasible_mixed(s).has_value());
    }
    SUBCASE("no strict rows accepts the origin") {
        HomSystem s{2, {qv({1, 0})}, {}};
        auto w = feasible_mixed(s);
        REQUIRE(w.has_value());
        CHECK(*w == zero_vector(2));
    }
}

TEST_CASE("relint_point on known instances") {
    SUBCASE("full-dimensional quadrant") {
        RelintPoint rp = relint_point({qv({1, 0}), qv({0, 1})}, 2);
        CHECK(rp.implicit_rows.empty());
        CHECK(rp.point[0] > 0);
        CHECK(rp.point[1] > 0);
    }
    SUBCASE("opposing rows force equality") {
        RelintPoint rp = relint_point({qv({1, 0}), qv({-1, 0})}, 2);
        CHECK(rp.implicit_rows == std::vector<std::size_t>{0, 1});
        CHECK(rp.point[0] == 0);
    }
    SUBCASE("no rows") {
        RelintPoint rp = relint_point({}, 3);
        CHECK(rp.point == zero_vector(3));
        CHECK(rp.implicit_rows.empty());
    }
}

TEST_CASE("project_eliminate on known instances") {
    SUBCASE("lower bound pairing") {
        // x1 - mu >= 0, mu >= 0; x2 > 0 over (x1, x2, mu); eliminate mu
        HomSystem s{3, {qv({1, 0, -1}), qv({0, 0, 1})}, {qv({0, 1, 0})}};
        HomSystem p = project_eliminate(s, 2);
        CHECK(p.dim == 2);
        CHECK(p.nonstrict == QMatrix{qv({1, 0})});
        CHECK(p.strict == QMatrix{qv({0, 1})});
    }
    SUBCASE("absent coordinate just drops the column") {
        HomSystem s{3, {qv({1, 2, 0})}, {qv({0, 3, 0})}};
        HomSystem p = project_eliminate(s, 2);
        CHECK(p.nonstrict == QMatrix{qv({1, 2})});
        CHECK(p.strict == QMatrix{qv({0, 1})});
    }
    SUBCASE("contradictory strict bounds leave a marker row") {
        HomSystem s{2, {}, {qv({1, -1}), qv({-1, 1})}};
        HomSystem p = project_eliminate(s, 1);
        REQUIRE(p.strict.size() == 1);
        CHECK(is_zero(p.strict[0]));
        CHECK(p.has_marker_row());
        CHECK(!feasible_mixed(p).has_value());
    }
    SUBCASE("coordinate out of range") {
        HomSystem s{2, {qv({1, 0})}, {}};
        CHECK_THROWS_AS(project_eliminate(s, 2), DimensionMismatchError);
    }
}

TEST_CASE("feasible_mixed agrees with the Fourier-Motzkin oracle") {
    testgen::Rng rng(20240802);
    int feasible_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = (std::size_t)testgen::rand_int(rng, 1, 4);
        const std::size_t rows = (std::size_t)testgen::rand_int(rng, 1, 6);
        HomSystem s;
        s.dim = dim;
        for (std::size_t i = 0; i < rows; ++i) {
            QVector row = testgen::int_vector(rng, dim, -4, 4);
            if (testgen::rand_int(rng, 0, 1)) {
                s.strict.push_back(std::move(row));
            } else {
                s.nonstrict.push_back(std::move(row));
            }
        }
        auto w = feasible_mixed(s);
        CHECK(w.has_value() == fm_oracle::feasible(s));
        if (w) {
            ++feasible_count;
            CHECK(s.satisfied_by(*w));
        }
    }
    CHECK(feasible_count > 20);  // the sample covers both outcomes
}

namespace {

// Is there a value of the eliminated variable making every row of s true at
// (z, x_k)? One-dimensional interval arithmetic, independent of the library.
bool lift_exists(const HomSystem& s, std::size_t k, const QVector& z) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    auto scan = [&](const QVector& row, bool strict) -> bool {
        QVector rest;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != k) rest.push_back(row[j]);
        }
        const Rational c = dot(rest, z);
        const Rational a = row[k];
        if (a == 0) return strict ? c > 0 : c >= 0;
        const Rational bound = -c / a;
        if (a > 0) {  // x_k >= bound
            if (!has_lo) {
                lo = bound;
                lo_strict = strict;
            } else if (bound > lo) {
                lo = bound;
                lo_strict = strict;
            } else if (bound == lo) {
                lo_strict = lo_strict || strict;
            }
            has_lo = true;
        } else {  // x_k <= bound
            if (!has_hi) {
                hi = bound;
                hi_strict = strict;
            } else if (bound < hi) {
                hi = bound;
                hi_strict = strict;
            } else if (bound == hi) {
                hi_strict = hi_strict || strict;
            }
            has_hi = true;
        }
        return true;
    };
    for (const QVector& row : s.nonstrict) {
        if (!scan(row, false)) return false;
    }
    for (const QVector& row : s.strict) {
        if (!scan(row, true)) return false;
    }
    if (!has_lo || !has_hi) return true;
    if (lo < hi) return true;
    return lo == hi && !lo_strict && !hi_strict;
}

}  // namespace

TEST_CASE("project_eliminate describes exactly the projection") {
    testgen::Rng rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = (std::size_t)testgen::rand_int(rng, 2, 3);
        const std::size_t rows = (std::size_t)testgen::rand_int(rng, 1, 4);
        HomSystem s;
        s.dim = dim;
        for (std::size_t i = 0; i < rows; ++i) {
            QVector row = testgen::int_vector(rng, dim, -3, 3);
            if (testgen::rand_int(rng, 0, 2) == 0) {
                s.strict.push_back(std::move(row));
            } else {
                s.nonstrict.push_back(std::move(row));
            }
        }
        const std::size_t k = (std::size_t)testgen::rand_int(rng, 0, (long long)dim - 1);
        HomSystem p = project_eliminate(s, k);
        for (int sample = 0; sample < 40; ++sample) {
            QVector z = testgen::int_vector(rng, dim - 1, -3, 3);
            CHECK(p.satisfied_by(z) == lift_exists(s, k, z));
        }
    }
}
