#include "cones/cone.hpp"

#include <stdexcept>

#include "cones/errors.hpp"
#include "cones/fourier_motzkin.hpp"
#include "cones/simplex.hpp"

namespace cones {

MixedCone::MixedCone(std::size_t dim, QMatrix nonstrict, QMatrix strict) {
    system.dim = dim;
    system.nonstrict = std::move(nonstrict);
    system.strict = std::move(strict);
    system.normalize();
}

bool member(const MixedCone& k, const QVector& x) { return k.system.satisfied_by(x); }

bool member(const LexHalfspace& k, const QVector& x) {
    const Rational v = k.u.eval(x).value;
    return k.relation == Relation::Strict ? v > 0 : v >= 0;
}

bool member(const StepSystemCone& k, const QVector& x) {
    if (x.size() != k.dim) throw DimensionMismatchError("point has wrong dimension");
    for (const StepConstraint& c : k.constraints) {
        const Rational v = c.u.eval(x).value;
        if (c.relation == Relation::Strict ? v <= 0 : v < 0) return false;
    }
    return true;
}

bool member(const Cone& k, const QVector& x) {
    return std::visit([&](const auto& c) { return member(c, x); }, k);
}

std::optional<QVector> nonempty_witness(const MixedCone& k) { return feasible_mixed(k.system); }

std::optional<QVector> nonempty_witness(const LexHalfspace& k) {
    if (k.relation == Relation::NonStrict) return zero_vector(k.dim());
    // Any point where the first functional is positive lies at level 0.
    const QVector& l0 = k.u.cortege.at(0).coeffs;
    for (std::size_t j = 0; j < l0.size(); ++j) {
        if (l0[j] != 0) {
            QVector x = zero_vector(k.dim());
            x[j] = Rational(1) / l0[j];
            return x;
        }
    }
    throw std::logic_error("cortege functional cannot be zero");
}

std::optional<QVector> nonempty_witness(const StepSystemCone& k, std::size_t cap) {
    for (const LevelAssignment& a : all_level_assignments(k, cap)) {
        if (std::optional<QVector> w = nonempty_witness(assignment_cone(k, a))) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<QVector> nonempty_witness(const Cone& k, std::size_t cap) {
    if (const auto* m = std::get_if<MixedCone>(&k)) return nonempty_witness(*m);
    if (const auto* h = std::get_if<LexHalfspace>(&k)) return nonempty_witness(*h);
    return nonempty_witness(std::get<StepSystemCone>(k), cap);
}

bool is_empty(const MixedCone& k) { return !nonempty_witness(k); }
bool is_empty(const LexHalfspace& k) { return !nonempty_witness(k); }
bool is_empty(const StepSystemCone& k, std::size_t cap) { return !nonempty_witness(k, cap); }
bool is_empty(const Cone& k, std::size_t cap) { return !nonempty_witness(k, cap); }

namespace {

void require_nonempty(bool empty) {
    if (empty) throw EmptyConeError();
}

}  // namespace

bool is_asymmetric(const MixedCone& k) {
    require_nonempty(is_empty(k));
    return !member(k, zero_vector(k.dim()));
}

bool is_asymmetric(const LexHalfspace& k) {
    require_nonempty(is_empty(k));
    return k.relation == Relation::Strict;
}

bool is_asymmetric(const StepSystemCone& k, std::size_t cap) {
    require_nonempty(is_empty(k, cap));
    return !member(k, zero_vector(k.dim));
}

bool is_asymmetric(const Cone& k, std::size_t cap) {
    if (const auto* m = std::get_if<MixedCone>(&k)) return is_asymmetric(*m);
    if (const auto* h = std::get_if<LexHalfspace>(&k)) return is_asymmetric(*h);
    return is_asymmetric(std::get<StepSystemCone>(k), cap);
}

LinealitySpace lineality_space(const MixedCone& k) {
    require_nonempty(is_empty(k));
    return {Subspace::from_spanning(k.dim(), kernel_basis(k.system.all_rows_relaxed(), k.dim())),
            true};
}

namespace {

QMatrix cortege_rows(const StepLinearFunction& u) {
    QMatrix rows;
    for (const LinearFunctional& f : u.cortege.functionals()) rows.push_back(f.coeffs);
    return rows;
}

}  // namespace

LinealitySpace lineality_space(const LexHalfspace& k) {
    return {Subspace::from_spanning(k.dim(), kernel_basis(cortege_rows(k.u), k.dim())), true};
}

LinealitySpace lineality_space(const StepSystemCone& k, std::size_t cap) {
    require_nonempty(is_empty(k, cap));
    QMatrix rows;
    for (const StepConstraint& c : k.constraints) {
        QMatrix r = cortege_rows(c.u);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    // All functionals vanish on L_K, so this is a subset of it; it is exact
    // for a single constraint (a halfspace) but in general no formula for the
    // multi-constraint case is available.
    return {Subspace::from_spanning(k.dim, kernel_basis(rows, k.dim)), k.constraints.size() <= 1};
}

LinealitySpace lineality_space(const Cone& k, std::size_t cap) {
    if (const auto* m = std::get_if<MixedCone>(&k)) return lineality_space(*m);
    if (const auto* h = std::get_if<LexHalfspace>(&k)) return lineality_space(*h);
    return lineality_space(std::get<StepSystemCone>(k), cap);
}

Subspace linear_hull(const MixedCone& k) {
    require_nonempty(is_empty(k));
    // For a nonempty mixed cone the closure is the row relaxation, and the
    // linear hull is cut out by the relaxation's implicit equalities.
    const QMatrix rows = k.system.all_rows_relaxed();
    RelintPoint rp = relint_point(rows, k.dim());
    QMatrix implicit;
    for (std::size_t i : rp.implicit_rows) implicit.push_back(rows[i]);
    return Subspace::from_spanning(k.dim(), kernel_basis(implicit, k.dim()));
}

Subspace linear_hull(const LexHalfspace& k) { return Subspace::full(k.dim()); }

HalfspaceChain halfspace_components(const LexHalfspace& h) {
    if (h.relation != Relation::Strict) {
        throw std::invalid_argument("halfspace_components expects a strict halfspace");
    }
    const std::size_t n = h.dim();
    const Cortege& c = h.u.cortege;
    HalfspaceChain chain;
    QMatrix prefix;
    for (std::size_t j = 0; j < c.size(); ++j) {
        HalfspaceComponent comp;
        comp.level = j;
        comp.lin = Subspace::from_spanning(n, kernel_basis(prefix, n));
        QMatrix eq;
        for (const QVector& row : prefix) {
            eq.push_back(row);
            eq.push_back(negate(row));
        }
        comp.cone = MixedCone(n, eq, {c.at(j).coeffs});
        prefix.push_back(c.at(j).coeffs);
        comp.lineality = Subspace::from_spanning(n, kernel_basis(prefix, n));
        chain.components.push_back(std::move(comp));
    }
    chain.lineality = Subspace::from_spanning(n, kernel_basis(prefix, n));
    return chain;
}

MixedCone intersect(const MixedCone& a, const MixedCone& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("cone dimensions differ");
    QMatrix nonstrict = a.system.nonstrict;
    nonstrict.insert(nonstrict.end(), b.system.nonstrict.begin(), b.system.nonstrict.end());
    QMatrix strict = a.system.strict;
    strict.insert(strict.end(), b.system.strict.begin(), b.system.strict.end());
    return MixedCone(a.dim(), std::move(nonstrict), std::move(strict));
}

StepSystemCone as_step_system(const MixedCone& k) {
    StepSystemCone out;
    out.dim = k.dim();
    for (const QVector& a : k.system.nonstrict) {
        out.constraints.push_back({StepLinearFunction{Cortege({LinearFunctional{a}})},
                                   Relation::NonStrict});
    }
    for (const QVector& b : k.system.strict) {
        if (is_zero(b)) {
            // "0 > 0" marker: encode the empty set with two contradictory
            // strict constraints.
            if (k.dim() == 0) throw std::invalid_argument("cannot convert empty 0-dim cone");
            QVector e = unit_vector(k.dim(), 0);
            out.constraints.push_back(
                {StepLinearFunction{Cortege({LinearFunctional{e}})}, Relation::Strict});
            out.constraints.push_back(
                {StepLinearFunction{Cortege({LinearFunctional{negate(e)}})}, Relation::Strict});
            continue;
        }
        out.constraints.push_back({StepLinearFunction{Cortege({LinearFunctional{b}})},
                                   Relation::Strict});
    }
    return out;
}

StepSystemCone as_step_system(const LexHalfspace& k) {
    return StepSystemCone{k.dim(), {StepConstraint{k.u, k.relation}}};
}

StepSystemCone as_step_system(const StepSystemCone& k) { return k; }

Cone intersect(const Cone& a, const Cone& b) {
    if (const auto* ma = std::get_if<MixedCone>(&a)) {
        if (const auto* mb = std::get_if<MixedCone>(&b)) {
            return intersect(*ma, *mb);
        }
    }
    StepSystemCone sa = std::visit([](const auto& k) { return as_step_system(k); }, a);
    StepSystemCone sb = std::visit([](const auto& k) { return as_step_system(k); }, b);
    if (sa.dim != sb.dim) throw DimensionMismatchError("cone dimensions differ");
    sa.constraints.insert(sa.constraints.end(), sb.constraints.begin(), sb.constraints.end());
    return sa;
}

MixedCone conv_union_ray(const MixedCone& k, const QVector& r) {
    if (r.size() != k.dim()) throw DimensionMismatchError("ray has wrong dimension");
    if (is_zero(r)) throw std::invalid_argument("ray direction must be nonzero");
    require_nonempty(is_empty(k));

    // System over (z, mu): A(z - mu r) >= 0, B(z - mu r) > 0, mu >= 0.
    const std::size_t n = k.dim();
    HomSystem lifted;
    lifted.dim = n + 1;
    auto lift_row = [&](const QVector& a) {
        QVector row = a;
        row.push_back(-dot(a, r));
        return row;
    };
    for (const QVector& a : k.system.nonstrict) lifted.nonstrict.push_back(lift_row(a));
    for (const QVector& b : k.system.strict) lifted.strict.push_back(lift_row(b));
    QVector mu_row = zero_vector(n + 1);
    mu_row[n] = 1;
    lifted.nonstrict.push_back(std::move(mu_row));

    HomSystem projected = project_eliminate(lifted, n);
    MixedCone out;
    out.system = std::move(projected);
    out.system.normalize();
    return out;
}

bool cone_subset(const MixedCone& inner, const MixedCone& outer) {
    if (inner.dim() != outer.dim()) throw DimensionMismatchError("cone dimensions differ");
    for (const QVector& a : outer.system.nonstrict) {
        HomSystem s = inner.system;
        s.strict.push_back(negate(a));
        if (feasible_mixed(s)) return false;  // some inner point has a.x < 0
    }
    for (const QVector& b : outer.system.strict) {
        HomSystem s = inner.system;
        s.nonstrict.push_back(negate(b));
        if (feasible_mixed(s)) return false;  // some inner point has b.x <= 0
    }
    return true;
}

MixedCone assignment_cone(const StepSystemCone& k, const LevelAssignment& a) {
    if (a.levels.size() != k.constraints.size()) {
        throw std::invalid_argument("assignment arity differs from constraint count");
    }
    QMatrix nonstrict, strict;
    for (std::size_t c = 0; c < k.constraints.size(); ++c) {
        const Cortege& cortege = k.constraints[c].u.cortege;
        const std::size_t upto = a.levels[c] ? *a.levels[c] : cortege.size();
        for (std::size_t i = 0; i < upto; ++i) {
            nonstrict.push_back(cortege.at(i).coeffs);
            nonstrict.push_back(negate(cortege.at(i).coeffs));
        }
        if (a.levels[c]) strict.push_back(cortege.at(*a.levels[c]).coeffs);
    }
    return MixedCone(k.dim, std::move(nonstrict), std::move(strict));
}

std::vector<LevelAssignment> all_level_assignments(const StepSystemCone& k, std::size_t cap) {
    std::size_t count = 1;
    std::vector<std::size_t> choices;
    for (const StepConstraint& c : k.constraints) {
        const std::size_t options =
            c.u.cortege.size() + (c.relation == Relation::NonStrict ? 1 : 0);
        choices.push_back(options);
        if (count > cap / options) throw CandidateBlowupError(count * options, cap);
        count *= options;
    }

    std::vector<LevelAssignment> out;
    out.reserve(count);
    LevelAssignment current;
    current.levels.resize(k.constraints.size());
    // Odometer over per-constraint options; the all-zero choice sorts last.
    std::vector<std::size_t> digit(k.constraints.size(), 0);
    for (std::size_t produced = 0; produced < count; ++produced) {
        for (std::size_t c = 0; c < k.constraints.size(); ++c) {
            const std::size_t levels = k.constraints[c].u.cortege.size();
            current.levels[c] =
                digit[c] < levels ? std::optional<std::size_t>(digit[c]) : std::nullopt;
        }
        out.push_back(current);
        for (std::size_t c = k.constraints.size(); c-- > 0;) {
            if (++digit[c] < choices[c]) break;
            digit[c] = 0;
        }
    }
    return out;
}

}  // namespace cones
