#ifndef CONES_LINALG_HPP
#define CONES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "cones/rational.hpp"

namespace cones {

using QVector = std::vector<Rational>;
/// Row-major rectangular matrix; rows all share one dimension.
using QMatrix = std::vector<QVector>;

QVector zero_vector(std::size_t dim);
QVector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const QVector& v);

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& t, const QVector& v);
QVector negate(const QVector& v);

/// Scale a nonzero rational row to coprime integer entries; sign preserved.
/// Zero rows are returned unchanged.
QVector normalize_row(const QVector& row);

/**
 * In-place reduced row echelon form with leading ones; zero rows are dropped.
 * Returns the pivot column of each remaining row (so `m.size()` is the rank
 * afterwards). RREF is canonical for the row space, which the rest of the
 * library relies on for deterministic subspace bases.
 */
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of {x : Mx = 0} inside ambient dimension `dim` (M may be empty).
/// Vectors are emitted in ascending free-column order.
std::vector<QVector> kernel_basis(const QMatrix& m, std::size_t dim);

/// True iff v lies in the span of the vectors in `s`.
bool in_span(const std::vector<QVector>& s, const QVector& v);

/**
 * A vector subspace given by a canonical (RREF) basis; empty basis means {0}.
 * Canonical bases make equality a plain comparison.
 */
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<QVector> basis;

    static Subspace from_spanning(std::size_t ambient_dim, QMatrix spanning);
    static Subspace full(std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim);

    std::size_t dim() const { return basis.size(); }
    bool contains(const QVector& v) const;
    bool includes(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;
};

}  // namespace cones

#endif
