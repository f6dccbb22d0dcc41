#ifndef CONES_SEPARATION_HPP
#define CONES_SEPARATION_HPP

#include "cones/cone.hpp"
#include "cones/structure.hpp"

namespace cones {

/**
 * Step-linear separation witness: u > 0 on the first cone, u <= 0 on the
 * second. Construction always post-verifies and throws rather than return an
 * unverified certificate, so `verified` is false only for certificates built
 * from user-supplied corteges via verify_certificate.
 */
struct SeparationCertificate {
    Cortege cortege;
    bool verified = false;
};

/**
 * Decide K subset of {u > 0} (Strict) or {u >= 0} (NonStrict) by recursion on
 * the cortege: the current functional must be nonnegative on the closure of
 * the residue, then the residue is cut to the functional's kernel. A residue
 * that survives the whole cortege sits where u = 0: it passes NonStrict and
 * fails Strict.
 */
bool included_in_halfspace(const MixedCone& k, const StepLinearFunction& u, Relation rel);
bool included_in_halfspace(const LexHalfspace& k, const StepLinearFunction& u, Relation rel,
                           std::size_t cap = kDefaultCandidateCap);
bool included_in_halfspace(const StepSystemCone& k, const StepLinearFunction& u, Relation rel,
                           std::size_t cap = kDefaultCandidateCap);

/// Exact check that `u` strictly separates k1 from k2 (u > 0 on k1, u <= 0 on k2).
bool verify_certificate(const MixedCone& k1, const MixedCone& k2, const Cortege& u);

/**
 * Build a verified separation certificate for disjoint cones (k1 asymmetric).
 * Level by level, the weak separators l with l >= 0 on the closed k1-residue
 * and l <= 0 on the closed k2-residue form a polyhedral cone by duality; a
 * relative-interior choice makes the level as strict as possible. Both
 * residues are then restricted to ker l and the recursion continues until the
 * k1-residue empties. Once the k2-residue is empty its side imposes nothing.
 */
SeparationCertificate separate(const MixedCone& k1, const MixedCone& k2);

/// Extend an asymmetric cone to a strict conical halfspace H with K inside H
/// and the lineality space of K inside that of H (separating K from L_K).
LexHalfspace regular_extension(const MixedCone& k);

/// Certificate u with u > 0 on K and u(y) <= 0 for a non-member y.
Cortege nonmember_certificate(const MixedCone& k, const QVector& y);

}  // namespace cones

#endif
