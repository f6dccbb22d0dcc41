#ifndef CONES_INFDIM_HPP
#define CONES_INFDIM_HPP

#include <map>
#include <optional>
#include <vector>

#include "cones/rational.hpp"

namespace cones::infdim {

/// Basis index: an integer, or the distinguished index above all integers.
struct ExtIndex {
    bool plus_inf = false;
    long long i = 0;

    static ExtIndex integer(long long v) { return {false, v}; }
    static ExtIndex infinity() { return {true, 0}; }

    friend bool operator==(const ExtIndex& a, const ExtIndex& b) {
        return a.plus_inf == b.plus_inf && (a.plus_inf || a.i == b.i);
    }
    friend bool operator<(const ExtIndex& a, const ExtIndex& b) {
        if (a.plus_inf != b.plus_inf) return b.plus_inf;
        return !a.plus_inf && a.i < b.i;
    }
};

/// Finitely supported vector over the extended basis; zeros are never stored.
using FinSuppVector = std::map<ExtIndex, Rational>;

FinSuppVector basis_vector(const ExtIndex& idx);
FinSuppVector fsv_add(const FinSuppVector& a, const FinSuppVector& b);
FinSuppVector fsv_scale(const Rational& t, const FinSuppVector& a);

/**
 * Component label in the halfspace model whose functionals are the total sum
 * (with the infinity coordinate) and the prefix sums: Level(m) when the
 * prefix functional at m is the last nonzero one and positive, LevelInf when
 * the total is positive, Lineality when everything vanishes. Ordered
 * Lineality < Level(m) < Level(n) < LevelInf for m < n.
 */
struct ExtSignature {
    enum class Kind { NotMember, Lineality, Level, LevelInf };
    Kind kind = Kind::NotMember;
    long long level = 0;  // meaningful only for Kind::Level

    bool operator==(const ExtSignature&) const = default;
};

bool ext_sig_le(const ExtSignature& a, const ExtSignature& b);

ExtSignature ext_signature(const FinSuppVector& x);

/// y <=_K x in the halfspace model; both points must classify as members.
bool ext_dominates(const FinSuppVector& y, const FinSuppVector& x);

/// Canonical component witness: e_inf for the top, e_m - e_{m+1} for level m.
FinSuppVector component_witness(const std::optional<long long>& m);

/// Support of a nonnegative-orthant member ({i : x_i > 0}), or nullopt when
/// x has a negative coordinate or is zero.
std::optional<std::vector<ExtIndex>> orthant_signature(const FinSuppVector& x);

/// Subset test on supports.
bool orthant_dominates(const FinSuppVector& y, const FinSuppVector& x);

enum class EmptyIcrCone { Orthant, HatFace };

/**
 * A member of the same cone that the given member does not dominate: a fresh
 * basis vector for the orthant, the next-level witness for the face below the
 * top component. Its existence for every member is the computational witness
 * that neither family has a greatest element, i.e. the intrinsic core is
 * empty.
 */
FinSuppVector empty_icr_witness(EmptyIcrCone which, const FinSuppVector& x);

}  // namespace cones::infdim

#endif
