#ifndef CONES_STRUCTURE_HPP
#define CONES_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cones/cone.hpp"

namespace cones {

/**
 * Canonical open-component label. Two member points are equivalent under the
 * dominance relation iff their signatures are equal: for mixed cones the
 * sorted set of tight non-strict rows, for step systems the per-constraint
 * level of the first nonvanishing functional (nullopt when all vanish).
 */
struct Signature {
    enum class Kind { TightRows, Levels };

    Kind kind = Kind::TightRows;
    std::vector<std::size_t> tight;
    std::vector<std::optional<std::size_t>> levels;

    bool operator==(const Signature&) const = default;
    std::string label() const;
};

/// a <=* b in the component order (b's class dominates a's).
bool sig_below(const Signature& a, const Signature& b);
/// Least upper bound: tight-set intersection / componentwise level minimum.
Signature sig_join(const Signature& a, const Signature& b);

struct ComponentWitness {
    Signature signature;
    QVector witness;
};

/// y <=_K x: does x dominate y, i.e. x - lambda*y in K for some lambda > 0.
bool dominates(const MixedCone& k, const QVector& y, const QVector& x);
bool dominates(const StepSystemCone& k, const QVector& y, const QVector& x);

bool equivalent(const MixedCone& k, const QVector& x, const QVector& y);
bool equivalent(const StepSystemCone& k, const QVector& x, const QVector& y);

Signature signature(const MixedCone& k, const QVector& x);
Signature signature(const StepSystemCone& k, const QVector& x);

/// The component of x + y, the least upper bound of the components of x and y.
ComponentWitness join_witness(const MixedCone& k, const QVector& x, const QVector& y);
ComponentWitness join_witness(const StepSystemCone& k, const QVector& x, const QVector& y);

/// Minimal face of k containing x: tight non-strict rows become equalities.
MixedCone minimal_face(const MixedCone& k, const QVector& x);

/// Is x in the intrinsic core (relative algebraic interior) of k.
bool icr_member(const MixedCone& k, const QVector& x);
bool icr_member(const StepSystemCone& k, const QVector& x,
                std::size_t cap = kDefaultCandidateCap);

/**
 * The upper semilattice of open components: nodes in canonical order, the
 * covering edges of the component order (lower, upper), the full join table,
 * and the greatest node when it exists (then the intrinsic core is that
 * component, and it is nonempty).
 */
struct SemilatticeGraph {
    std::vector<ComponentWitness> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> join;
    std::optional<std::size_t> greatest;
};

SemilatticeGraph enumerate_components(const MixedCone& k,
                                      std::size_t cap = kDefaultCandidateCap);
SemilatticeGraph enumerate_components(const StepSystemCone& k,
                                      std::size_t cap = kDefaultCandidateCap);
SemilatticeGraph enumerate_components(const LexHalfspace& k,
                                      std::size_t cap = kDefaultCandidateCap);
SemilatticeGraph enumerate_components(const Cone& k, std::size_t cap = kDefaultCandidateCap);

}  // namespace cones

#endif
