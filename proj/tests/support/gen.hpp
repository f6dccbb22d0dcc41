#ifndef CONES_TESTS_GEN_HPP
#define CONES_TESTS_GEN_HPP

// Deterministic random generators shared by the test suites.

#include <random>
#include <vector>

#include "cones/cone.hpp"
#include "cones/step_linear.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline cones::Rational small_int(Rng& rng, long long lo = -9, long long hi = 9) {
    return cones::Rational(rand_int(rng, lo, hi));
}

/// Small rational p/q with q in [1,9].
inline cones::Rational small_rational(Rng& rng) {
    return cones::Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 9));
}

inline cones::QVector int_vector(Rng& rng, std::size_t dim, long long lo = -9,
                                 long long hi = 9) {
    cones::QVector v(dim);
    for (auto& e : v) e = small_int(rng, lo, hi);
    return v;
}

inline cones::QVector nonzero_int_vector(Rng& rng, std::size_t dim) {
    for (;;) {
        cones::QVector v = int_vector(rng, dim, -4, 4);
        if (!cones::is_zero(v)) return v;
    }
}

inline cones::QMatrix int_matrix(Rng& rng, std::size_t rows, std::size_t dim) {
    cones::QMatrix m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(int_vector(rng, dim, -4, 4));
    return m;
}

/// Random mixed cone: up to max_rows nonzero rows, each strict with the given
/// per-mill probability.
inline cones::MixedCone random_mixed_cone(Rng& rng, std::size_t dim, std::size_t max_rows,
                                          int strict_percent = 40) {
    const std::size_t rows = static_cast<std::size_t>(rand_int(rng, 1, (long long)max_rows));
    cones::QMatrix nonstrict, strict;
    for (std::size_t i = 0; i < rows; ++i) {
        cones::QVector row = nonzero_int_vector(rng, dim);
        if (rand_int(rng, 0, 99) < strict_percent) {
            strict.push_back(std::move(row));
        } else {
            nonstrict.push_back(std::move(row));
        }
    }
    return cones::MixedCone(dim, std::move(nonstrict), std::move(strict));
}

inline cones::MixedCone random_nonempty_cone(Rng& rng, std::size_t dim, std::size_t max_rows,
                                             int strict_percent = 40) {
    for (;;) {
        cones::MixedCone k = random_mixed_cone(rng, dim, max_rows, strict_percent);
        if (!cones::is_empty(k)) return k;
    }
}

inline cones::MixedCone random_asymmetric_cone(Rng& rng, std::size_t dim,
                                               std::size_t max_rows) {
    for (;;) {
        cones::MixedCone k = random_mixed_cone(rng, dim, max_rows, 60);
        if (k.system.strict.empty()) continue;
        if (!cones::is_empty(k) && cones::is_asymmetric(k)) return k;
    }
}

/// Random valid cortege (independent nonzero functionals).
inline cones::Cortege random_cortege(Rng& rng, std::size_t dim, std::size_t length) {
    std::vector<cones::LinearFunctional> fs;
    std::vector<cones::QVector> rows;
    while (fs.size() < length) {
        cones::QVector f = int_vector(rng, dim);
        if (cones::is_zero(f) || cones::in_span(rows, f)) continue;
        rows.push_back(f);
        fs.push_back({std::move(f)});
    }
    return cones::Cortege(std::move(fs));
}

/// Members of a mixed cone: nonnegative integer combinations of component
/// witnesses stay inside by convexity.
inline cones::QVector random_member(Rng& rng, const std::vector<cones::QVector>& witnesses) {
    cones::QVector x = witnesses[static_cast<std::size_t>(
        rand_int(rng, 0, (long long)witnesses.size() - 1))];
    for (const cones::QVector& w : witnesses) {
        if (rand_int(rng, 0, 1)) x = cones::add(x, cones::scale(small_int(rng, 0, 3), w));
    }
    return x;
}

}  // namespace testgen

#endif
