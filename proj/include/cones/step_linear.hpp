#ifndef CONES_STEP_LINEAR_HPP
#define CONES_STEP_LINEAR_HPP

#include <optional>
#include <vector>

#include "cones/linalg.hpp"

namespace cones {

struct LinearFunctional {
    QVector coeffs;
    Rational operator()(const QVector& x) const { return dot(coeffs, x); }
};

/**
 * Linearly ordered, linearly independent family of nonzero linear
 * functionals, stored least-first. The first functional decides the sign of
 * the generated step-linear function on most of the space and corresponds to
 * the greatest open component of the halfspace it describes; orientation bugs
 * here are easy to introduce, so keep that anti-isomorphism in mind.
 *
 * The constructor enforces the family conditions: every functional nonzero
 * (ZeroFunctionalError) and none in the span of its predecessors
 * (DependentFunctionalError). For finite families the latter is equivalent to
 * each functional being nonzero on the intersection of the earlier kernels.
 */
class Cortege {
  public:
    explicit Cortege(std::vector<LinearFunctional> functionals);

    const std::vector<LinearFunctional>& functionals() const { return functionals_; }
    const LinearFunctional& at(std::size_t level) const { return functionals_.at(level); }
    std::size_t size() const { return functionals_.size(); }
    std::size_t dim() const { return dim_; }

    Cortege negated() const;

  private:
    std::vector<LinearFunctional> functionals_;
    std::size_t dim_;
};

/// Validating factory; returns the cortege or throws the rejection error.
Cortege validate_cortege(std::vector<LinearFunctional> functionals);

struct StepValue {
    Rational value;
    std::optional<std::size_t> level;  // first functional nonzero at x; nullopt if none
};

/// Lexicographic evaluation: the value of the first functional that does not
/// vanish at the argument, 0 when all vanish.
struct StepLinearFunction {
    Cortege cortege;

    std::size_t dim() const { return cortege.dim(); }
    StepValue eval(const QVector& x) const;

    /// Sign of u(x - lambda*y) for all sufficiently small lambda > 0.
    int eval_perturbed(const QVector& x, const QVector& y) const;

    StepLinearFunction negated() const { return StepLinearFunction{cortege.negated()}; }
};

/// Basis of the subspace where the first j functionals vanish; the whole
/// space for j = 0.
Subspace level_subspace(const Cortege& c, std::size_t j);

}  // namespace cones

#endif
