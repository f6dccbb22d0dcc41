#ifndef CONES_CONE_HPP
#define CONES_CONE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "cones/hom_system.hpp"
#include "cones/step_linear.hpp"

namespace cones {

enum class Relation { Strict, NonStrict };  // u > 0 vs u >= 0

/// Cap on enumeration candidates (tight-set subsets / level assignments).
constexpr std::size_t kDefaultCandidateCap = std::size_t(1) << 20;

/// Cone {x : Ax >= 0, Bx > 0}; rows normalized on construction.
struct MixedCone {
    HomSystem system;

    MixedCone() = default;
    MixedCone(std::size_t dim, QMatrix nonstrict, QMatrix strict);
    std::size_t dim() const { return system.dim; }
};

/// Conical halfspace {u > 0} (asymmetric) or {u >= 0} described by a
/// step-linear function.
struct LexHalfspace {
    StepLinearFunction u;
    Relation relation = Relation::Strict;
    std::size_t dim() const { return u.dim(); }
};

struct StepConstraint {
    StepLinearFunction u;
    Relation relation = Relation::Strict;
};

/// Intersection of halfspaces given by step-linear constraints.
struct StepSystemCone {
    std::size_t dim = 0;
    std::vector<StepConstraint> constraints;
};

using Cone = std::variant<MixedCone, LexHalfspace, StepSystemCone>;

bool member(const MixedCone& k, const QVector& x);
bool member(const LexHalfspace& k, const QVector& x);
bool member(const StepSystemCone& k, const QVector& x);
bool member(const Cone& k, const QVector& x);

std::optional<QVector> nonempty_witness(const MixedCone& k);
std::optional<QVector> nonempty_witness(const LexHalfspace& k);
std::optional<QVector> nonempty_witness(const StepSystemCone& k,
                                        std::size_t cap = kDefaultCandidateCap);
std::optional<QVector> nonempty_witness(const Cone& k, std::size_t cap = kDefaultCandidateCap);

bool is_empty(const MixedCone& k);
bool is_empty(const LexHalfspace& k);
bool is_empty(const StepSystemCone& k, std::size_t cap = kDefaultCandidateCap);
bool is_empty(const Cone& k, std::size_t cap = kDefaultCandidateCap);

/// True iff 0 is not a member. Throws EmptyConeError on an empty cone.
bool is_asymmetric(const MixedCone& k);
bool is_asymmetric(const LexHalfspace& k);
bool is_asymmetric(const StepSystemCone& k, std::size_t cap = kDefaultCandidateCap);
bool is_asymmetric(const Cone& k, std::size_t cap = kDefaultCandidateCap);

struct LinealitySpace {
    Subspace space;
    /// False only for multi-constraint step systems, where the kernel
    /// intersection is a guaranteed subset of the true lineality space but no
    /// exact formula is available.
    bool exact = true;
};

LinealitySpace lineality_space(const MixedCone& k);
LinealitySpace lineality_space(const LexHalfspace& k);
LinealitySpace lineality_space(const StepSystemCone& k, std::size_t cap = kDefaultCandidateCap);
LinealitySpace lineality_space(const Cone& k, std::size_t cap = kDefaultCandidateCap);

Subspace linear_hull(const MixedCone& k);
Subspace linear_hull(const LexHalfspace& k);

/**
 * One open component of a strict lex halfspace: at 0-based `level` j the
 * component is {l_0 = ... = l_{j-1} = 0, l_j > 0}, its linear hull is the
 * intersection of the earlier kernels, and its lineality space additionally
 * kills l_j.
 */
struct HalfspaceComponent {
    std::size_t level = 0;
    MixedCone cone;
    Subspace lin;
    Subspace lineality;
};

/// Component chain ordered greatest-first; `lineality` is L_H.
struct HalfspaceChain {
    std::vector<HalfspaceComponent> components;
    Subspace lineality;
};

HalfspaceChain halfspace_components(const LexHalfspace& h);

MixedCone intersect(const MixedCone& a, const MixedCone& b);
Cone intersect(const Cone& a, const Cone& b);

StepSystemCone as_step_system(const MixedCone& k);
StepSystemCone as_step_system(const LexHalfspace& k);
StepSystemCone as_step_system(const StepSystemCone& k);

/**
 * The cone {z : z - mu*r is in k for some mu >= 0}, i.e. k + ray(r), realized
 * by projecting one auxiliary variable. This is the convex hull of
 * k union {a*r : a > 0} up to points of the ray itself that the hull of two
 * non-closed cones may add; downstream users re-verify sidedness after the
 * fact, which keeps certificates sound.
 */
MixedCone conv_union_ray(const MixedCone& k, const QVector& r);

/// Exact inclusion test between mixed cones.
bool cone_subset(const MixedCone& inner, const MixedCone& outer);

/**
 * A per-constraint choice of evaluation level (nullopt = all functionals
 * vanish, possible only for non-strict constraints). Each assignment induces
 * a mixed cone; the feasible assignments partition the step-system cone.
 */
struct LevelAssignment {
    std::vector<std::optional<std::size_t>> levels;
    bool operator==(const LevelAssignment&) const = default;
};

MixedCone assignment_cone(const StepSystemCone& k, const LevelAssignment& a);
std::vector<LevelAssignment> all_level_assignments(const StepSystemCone& k, std::size_t cap);

}  // namespace cones

#endif
