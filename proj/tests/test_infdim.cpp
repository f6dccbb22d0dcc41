#include <doctest.h>

#include "cones/errors.hpp"
#include "cones/infdim.hpp"
#include "cones/structure.hpp"
#include "support/gen.hpp"

using namespace cones;
using namespace cones::infdim;

namespace {

FinSuppVector fsv(std::initializer_list<std::pair<long long, int>> entries,
                  int at_inf = 0) {
    FinSuppVector v;
    for (const auto& [i, val] : entries) {
        if (val != 0) v[ExtIndex::integer(i)] = Rational(val);
    }
    if (at_inf != 0) v[ExtIndex::infinity()] = Rational(at_inf);
    return v;
}

ExtSignature level(long long m) { return {ExtSignature::Kind::Level, m}; }

}  // namespace

TEST_CASE("extended signatures") {
    CHECK(ext_signature(fsv({}, 1)) == ExtSignature{ExtSignature::Kind::LevelInf, 0});
    CHECK(ext_signature(fsv({{3, 1}, {4, -1}})) == level(3));
    CHECK(ext_signature(fsv({{-5, 1}, {-4, -1}})) == level(-5));
    CHECK(ext_signature(fsv({}, -1)) == ExtSignature{ExtSignature::Kind::NotMember, 0});
    CHECK(ext_signature(fsv({})) == ExtSignature{ExtSignature::Kind::Lineality, 0});

    // gapped support: prefix 1 persists up to index 4
    CHECK(ext_signature(fsv({{0, 1}, {5, -1}})) == level(4));
    // negative top prefix is not a member
    CHECK(ext_signature(fsv({{0, -1}, {5, 1}})) ==
          ExtSignature{ExtSignature::Kind::NotMember, 0});
    // nonzero total with cancelling infinity coordinate: no level works
    CHECK(ext_signature(fsv({{0, 1}}, -1)) ==
          ExtSignature{ExtSignature::Kind::NotMember, 0});
    // positive total dominates everything
    CHECK(ext_signature(fsv({{7, 2}})) == ExtSignature{ExtSignature::Kind::LevelInf, 0});
}

TEST_CASE("extended dominance") {
    CHECK(ext_dominates(fsv({{1, 1}, {2, -1}}), fsv({}, 1)));    // E_m below E_inf
    CHECK(!ext_dominates(fsv({{2, 1}, {3, -1}}), fsv({{1, 1}, {2, -1}})));
    CHECK(ext_dominates(fsv({{1, 1}, {2, -1}}), fsv({{1, 2}, {2, -2}})));  // same level
    CHECK(ext_dominates(fsv({{1, 2}, {2, -2}}), fsv({{1, 1}, {2, -1}})));
    CHECK_THROWS_AS(ext_dominates(fsv({}, -1), fsv({}, 1)), NotMemberError);
}

TEST_CASE("component witnesses") {
    CHECK(ext_signature(component_witness(std::nullopt)) ==
          ExtSignature{ExtSignature::Kind::LevelInf, 0});
    CHECK(ext_signature(component_witness(0)) == level(0));
    CHECK(ext_signature(component_witness(-5)) == level(-5));
    CHECK(component_witness(0) == fsv({{0, 1}, {1, -1}}));
}

TEST_CASE("order embedding on levels -8..8 and infinity") {
    std::vector<std::optional<long long>> levels;
    for (long long m = -8; m <= 8; ++m) levels.push_back(m);
    levels.push_back(std::nullopt);  // +inf
    auto leq = [](const std::optional<long long>& a, const std::optional<long long>& b) {
        if (!b) return true;
        if (!a) return false;
        return *a <= *b;
    };
    for (const auto& m : levels) {
        for (const auto& n : levels) {
            CHECK(ext_dominates(component_witness(m), component_witness(n)) == leq(m, n));
        }
    }
}

TEST_CASE("signatures respect addition (join law)") {
    testgen::Rng rng(20240813);
    auto random_member = [&](void) -> FinSuppVector {
        // nonnegative combination of level witnesses, possibly plus e_inf
        FinSuppVector x;
        const int parts = (int)testgen::rand_int(rng, 1, 3);
        for (int p = 0; p < parts; ++p) {
            const long long m = testgen::rand_int(rng, -6, 6);
            x = fsv_add(x, fsv_scale(Rational(testgen::rand_int(rng, 1, 4)),
                                     component_witness(m)));
        }
        if (testgen::rand_int(rng, 0, 2) == 0) {
            x = fsv_add(x, fsv_scale(Rational(testgen::rand_int(rng, 1, 3)),
                                     component_witness(std::nullopt)));
        }
        return x;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const FinSuppVector x = random_member();
        const FinSuppVector y = random_member();
        const ExtSignature sx = ext_signature(x);
        const ExtSignature sy = ext_signature(y);
        REQUIRE(sx.kind != ExtSignature::Kind::NotMember);
        REQUIRE(sy.kind != ExtSignature::Kind::NotMember);
        const ExtSignature sum = ext_signature(fsv_add(x, y));
        // E_x v E_y = E_{x+y}: the sum lands in the higher component
        const ExtSignature expected = ext_sig_le(sx, sy) ? sy : sx;
        CHECK(sum == expected);
    }
}

TEST_CASE("orthant signatures and dominance") {
    const FinSuppVector x = fsv({{1, 1}, {7, 2}});
    auto ix = orthant_signature(x);
    REQUIRE(ix.has_value());
    CHECK(*ix == std::vector<ExtIndex>{ExtIndex::integer(1), ExtIndex::integer(7)});

    CHECK(orthant_dominates(fsv({{1, 1}}), x));
    CHECK(!orthant_dominates(fsv({{3, 1}}), x));
    CHECK(!orthant_signature(fsv({{1, -1}})).has_value());
    CHECK(!orthant_signature(fsv({})).has_value());
    CHECK_THROWS_AS(orthant_dominates(fsv({{1, -1}}), x), NotMemberError);
}

TEST_CASE("orthant dominance agrees with the finite-dimensional oracle") {
    testgen::Rng rng(20240814);
    for (int trial = 0; trial < 200; ++trial) {
        // members supported on indices 0..4
        FinSuppVector x, y;
        for (long long i = 0; i < 5; ++i) {
            if (testgen::rand_int(rng, 0, 2) == 0) {
                x[ExtIndex::integer(i)] = Rational(testgen::rand_int(rng, 1, 5));
            }
            if (testgen::rand_int(rng, 0, 2) == 0) {
                y[ExtIndex::integer(i)] = Rational(testgen::rand_int(rng, 1, 5));
            }
        }
        if (x.empty() || y.empty()) continue;

        // restriction of the orthant-minus-origin cone to coordinates 0..4
        QMatrix rows;
        for (std::size_t i = 0; i < 5; ++i) rows.push_back(unit_vector(5, i));
        QVector ones(5, Rational(1));
        const MixedCone orthant(5, rows, {ones});
        auto flat = [](const FinSuppVector& v) {
            QVector out = zero_vector(5);
            for (const auto& [idx, val] : v) out[(std::size_t)idx.i] = val;
            return out;
        };
        CHECK(orthant_dominates(y, x) == dominates(orthant, flat(y), flat(x)));
    }
}

TEST_CASE("empty intrinsic cores witnessed pointwise") {
    SUBCASE("orthant") {
        const FinSuppVector x = fsv({{1, 1}, {7, 2}});
        const FinSuppVector y = empty_icr_witness(EmptyIcrCone::Orthant, x);
        CHECK(y == fsv({{2, 1}}));  // smallest fresh positive index
        CHECK(!orthant_dominates(y, x));
        CHECK(empty_icr_witness(EmptyIcrCone::Orthant, fsv({{1, 1}, {2, 1}})) ==
              fsv({{3, 1}}));
    }
    SUBCASE("face below the top component") {
        const FinSuppVector x = fsv({{0, 1}, {1, -1}});
        const FinSuppVector y = empty_icr_witness(EmptyIcrCone::HatFace, x);
        CHECK(y == fsv({{1, 1}, {2, -1}}));
        CHECK(!ext_dominates(y, x));
        CHECK(ext_signature(y) == level(1));
        CHECK_THROWS_AS(empty_icr_witness(EmptyIcrCone::HatFace, fsv({}, 1)),
                        NotMemberError);
    }
    SUBCASE("random members never dominate their witness") {
        testgen::Rng rng(20240815);
        for (int trial = 0; trial < 100; ++trial) {
            FinSuppVector x;
            for (int p = 0; p < 3; ++p) {
                if (testgen::rand_int(rng, 0, 1)) {
                    x[ExtIndex::integer(testgen::rand_int(rng, -5, 5))] =
                        Rational(testgen::rand_int(rng, 1, 9));
                }
            }
            if (x.empty()) continue;
            const FinSuppVector y = empty_icr_witness(EmptyIcrCone::Orthant, x);
            CHECK(!orthant_dominates(y, x));

            const long long m = testgen::rand_int(rng, -6, 6);
            FinSuppVector f = fsv_scale(Rational(testgen::rand_int(rng, 1, 4)),
                                        component_witness(m));
            const FinSuppVector w = empty_icr_witness(EmptyIcrCone::HatFace, f);
            CHECK(!ext_dominates(w, f));
            CHECK(ext_signature(w).kind == ExtSignature::Kind::Level);
        }
    }
}
