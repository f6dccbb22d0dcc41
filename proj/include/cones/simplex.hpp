#ifndef CONES_SIMPLEX_HPP
#define CONES_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "cones/hom_system.hpp"
#include "cones/linalg.hpp"

namespace cones {

struct LpSolution {
    Rational value;
    QVector point;
};

/**
 * Exact rational LP: maximize c.v subject to M v <= b, v >= 0.
 * Two-phase tableau simplex with Bland's rule (lowest-index entering column;
 * ratio ties broken by lowest basic index), so runs are deterministic and
 * terminate. Returns nullopt when infeasible; throws std::logic_error on an
 * unbounded objective, which the callers in this library never produce.
 */
std::optional<LpSolution> simplex_maximize(const QMatrix& m, const QVector& b,
                                           const QVector& c);

/**
 * Exact witness of {x : Ax >= 0, Bx > 0}, or nullopt when the system is
 * infeasible. Decided by the lift: maximize t subject to Ax >= 0, Bx >= t*1,
 * -1 <= x_i <= 1, t <= 1; the system is feasible iff the optimum is positive.
 * Any returned witness satisfies every row exactly.
 */
std::optional<QVector> feasible_mixed(const HomSystem& s);

struct RelintPoint {
    QVector point;
    std::vector<std::size_t> implicit_rows;
};

/**
 * A point x with Ax >= 0 and a.x > 0 for every row a that is not an implicit
 * equality of {Ax >= 0}, together with the implicit row set. Built by summing
 * one strict witness per non-implicit row; convexity keeps every strict sign.
 * When all rows are implicit the point is 0.
 */
RelintPoint relint_point(const QMatrix& a, std::size_t dim);

}  // namespace cones

#endif
