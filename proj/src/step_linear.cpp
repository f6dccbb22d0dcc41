#include "cones/step_linear.hpp"

#include <stdexcept>

#include "cones/dual_scalar.hpp"
#include "cones/errors.hpp"

namespace cones {

Cortege::Cortege(std::vector<LinearFunctional> functionals)
    : functionals_(std::move(functionals)) {
    if (functionals_.empty()) {
        throw std::invalid_argument("cortege must contain at least one functional");
    }
    dim_ = functionals_[0].coeffs.size();
    std::vector<QVector> seen;
    for (std::size_t i = 0; i < functionals_.size(); ++i) {
        const QVector& f = functionals_[i].coeffs;
        if (f.size() != dim_) {
            throw DimensionMismatchError("cortege functionals have mixed dimensions");
        }
        if (is_zero(f)) throw ZeroFunctionalError(i);
        if (in_span(seen, f)) throw DependentFunctionalError(i);
        seen.push_back(f);
    }
}

Cortege Cortege::negated() const {
    std::vector<LinearFunctional> fs;
    fs.reserve(functionals_.size());
    for (const LinearFunctional& f : functionals_) fs.push_back({negate(f.coeffs)});
    return Cortege(std::move(fs));
}

Cortege validate_cortege(std::vector<LinearFunctional> functionals) {
    return Cortege(std::move(functionals));
}

StepValue StepLinearFunction::eval(const QVector& x) const {
    if (x.size() != dim()) throw DimensionMismatchError("point has wrong dimension");
    for (std::size_t j = 0; j < cortege.size(); ++j) {
        Rational v = cortege.at(j)(x);
        if (v != 0) return StepValue{std::move(v), j};
    }
    return StepValue{Rational(0), std::nullopt};
}

int StepLinearFunction::eval_perturbed(const QVector& x, const QVector& y) const {
    if (x.size() != dim() || y.size() != dim()) {
        throw DimensionMismatchError("point has wrong dimension");
    }
    for (std::size_t j = 0; j < cortege.size(); ++j) {
        DualScalar d{cortege.at(j)(x), cortege.at(j)(y)};
        if (d.std_part != 0 || d.inf_part != 0) return dual_sign(d);
    }
    return 0;
}

Subspace level_subspace(const Cortege& c, std::size_t j) {
    if (j >= c.size()) throw std::out_of_range("cortege level out of range");
    QMatrix rows;
    for (std::size_t i = 0; i < j; ++i) rows.push_back(c.at(i).coeffs);
    return Subspace::from_spanning(c.dim(), kernel_basis(rows, c.dim()));
}

}  // namespace cones
