#ifndef CONES_FOURIER_MOTZKIN_HPP
#define CONES_FOURIER_MOTZKIN_HPP

#include "cones/hom_system.hpp"

namespace cones {

/**
 * Fourier-Motzkin projection of the solution set of `s` along coordinate k.
 * A pairing of a lower and an upper bound row is strict iff at least one
 * parent row is strict. Zero strict rows ("0 > 0") survive normalization as
 * explicit infeasibility markers instead of raising mid-projection.
 */
HomSystem project_eliminate(const HomSystem& s, std::size_t k);

}  // namespace cones

#endif
