#include "cones/hom_system.hpp"

#include "cones/errors.hpp"

namespace cones {

void HomSystem::normalize() {
    QMatrix kept;
    for (const QVector& row : nonstrict) {
        if (row.size() != dim) throw DimensionMismatchError("system row has wrong dimension");
        if (is_zero(row)) continue;
        kept.push_back(normalize_row(row));
    }
    nonstrict = std::move(kept);
    for (QVector& row : strict) {
        if (row.size() != dim) throw DimensionMismatchError("system row has wrong dimension");
        row = normalize_row(row);
    }
}

bool HomSystem::satisfied_by(const QVector& x) const {
    if (x.size() != dim) throw DimensionMismatchError("point has wrong dimension");
    for (const QVector& row : nonstrict) {
        if (dot(row, x) < 0) return false;
    }
    for (const QVector& row : strict) {
        if (dot(row, x) <= 0) return false;
    }
    return true;
}

bool HomSystem::has_marker_row() const {
    for (const QVector& row : strict) {
        if (is_zero(row)) return true;
    }
    return false;
}

QMatrix HomSystem::all_rows_relaxed() const {
    QMatrix rows = nonstrict;
    rows.insert(rows.end(), strict.begin(), strict.end());
    return rows;
}

}  // namespace cones
