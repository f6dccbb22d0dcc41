#ifndef CONES_HOM_SYSTEM_HPP
#define CONES_HOM_SYSTEM_HPP

#include <cstddef>

#include "cones/linalg.hpp"

namespace cones {

/**
 * Homogeneous mixed system {x : a.x >= 0 for a in nonstrict, b.x > 0 for b in
 * strict}. Normalization scales rows to coprime integers (sign preserved),
 * drops trivially-true zero nonstrict rows, and keeps zero strict rows: a
 * "0 > 0" row is the explicit infeasibility marker produced by elimination.
 */
struct HomSystem {
    std::size_t dim = 0;
    QMatrix nonstrict;
    QMatrix strict;

    void normalize();
    bool satisfied_by(const QVector& x) const;
    /// True iff a zero strict row ("0 > 0") is present.
    bool has_marker_row() const;
    /// All rows, nonstrict first then strict, with strictness relaxed.
    QMatrix all_rows_relaxed() const;
};

}  // namespace cones

#endif
