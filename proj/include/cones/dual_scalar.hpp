#ifndef CONES_DUAL_SCALAR_HPP
#define CONES_DUAL_SCALAR_HPP

#include "cones/rational.hpp"

namespace cones {

/**
 * First-order value std - lambda*inf for an arbitrarily small lambda > 0.
 * Used to decide the sign of quantities like l(x - lambda*y) without picking
 * a concrete lambda: the standard part wins unless it vanishes.
 */
struct DualScalar {
    Rational std_part;
    Rational inf_part;
};

inline int dual_sign(const DualScalar& d) {
    if (d.std_part != 0) return sign(d.std_part);
    return -sign(d.inf_part);
}

}  // namespace cones

#endif
