#include "cones/separation.hpp"

#include <stdexcept>

#include "cones/errors.hpp"
#include "cones/simplex.hpp"

namespace cones {

bool included_in_halfspace(const MixedCone& k, const StepLinearFunction& u, Relation rel) {
    if (u.dim() != k.dim()) throw DimensionMismatchError("halfspace dimension differs");
    HomSystem residue = k.system;
    for (const LinearFunctional& f : u.cortege.functionals()) {
        if (!feasible_mixed(residue)) return true;
        HomSystem closure;
        closure.dim = residue.dim;
        closure.nonstrict = residue.all_rows_relaxed();
        closure.strict.push_back(negate(f.coeffs));
        if (feasible_mixed(closure)) return false;  // f drops below 0 on the residue
        residue.nonstrict.push_back(f.coeffs);
        residue.nonstrict.push_back(negate(f.coeffs));
    }
    if (rel == Relation::NonStrict) return true;
    return !feasible_mixed(residue).has_value();
}

bool included_in_halfspace(const LexHalfspace& k, const StepLinearFunction& u, Relation rel,
                           std::size_t cap) {
    return included_in_halfspace(as_step_system(k), u, rel, cap);
}

bool included_in_halfspace(const StepSystemCone& k, const StepLinearFunction& u, Relation rel,
                           std::size_t cap) {
    for (const LevelAssignment& a : all_level_assignments(k, cap)) {
        if (!included_in_halfspace(assignment_cone(k, a), u, rel)) return false;
    }
    return true;
}

bool verify_certificate(const MixedCone& k1, const MixedCone& k2, const Cortege& u) {
    StepLinearFunction f{u};
    return included_in_halfspace(k1, f, Relation::Strict) &&
           included_in_halfspace(k2, f.negated(), Relation::NonStrict);
}

namespace {

QVector restrict_row(const QVector& row, const std::vector<QVector>& basis) {
    QVector r;
    r.reserve(basis.size());
    for (const QVector& b : basis) r.push_back(dot(row, b));
    return r;
}

QMatrix restrict_rows(const QMatrix& rows, const std::vector<QVector>& basis) {
    QMatrix out;
    out.reserve(rows.size());
    for (const QVector& row : rows) out.push_back(restrict_row(row, basis));
    return out;
}

/// Mixed cone {x : every row of k vanishes}, i.e. the lineality space of k.
MixedCone lineality_cone(const MixedCone& k) {
    QMatrix rows;
    for (const QVector& r : k.system.all_rows_relaxed()) {
        rows.push_back(r);
        rows.push_back(negate(r));
    }
    return MixedCone(k.dim(), std::move(rows), {});
}

}  // namespace

SeparationCertificate separate(const MixedCone& k1, const MixedCone& k2) {
    if (k1.dim() != k2.dim()) throw DimensionMismatchError("cone dimensions differ");
    if (!is_asymmetric(k1)) throw NotAsymmetricError();
    if (nonempty_witness(intersect(k1, k2))) throw NotDisjointError();

    const std::size_t n = k1.dim();
    const QMatrix rows1 = k1.system.all_rows_relaxed();
    const QMatrix rows2 = k2.system.all_rows_relaxed();

    std::vector<QVector> vbasis;
    for (std::size_t i = 0; i < n; ++i) vbasis.push_back(unit_vector(n, i));

    std::vector<LinearFunctional> funcs;
    for (std::size_t level = 0;; ++level) {
        if (level > n) {
            throw ConstructionStuckError("separation recursion exceeded the ambient dimension");
        }
        HomSystem res1;
        res1.dim = vbasis.size();
        res1.nonstrict = restrict_rows(k1.system.nonstrict, vbasis);
        res1.strict = restrict_rows(k1.system.strict, vbasis);
        if (!feasible_mixed(res1)) break;

        HomSystem res2;
        res2.dim = vbasis.size();
        res2.nonstrict = restrict_rows(k2.system.nonstrict, vbasis);
        res2.strict = restrict_rows(k2.system.strict, vbasis);
        const bool k2_alive = feasible_mixed(res2).has_value();

        const QMatrix r1v = restrict_rows(rows1, vbasis);
        const QMatrix r2v = restrict_rows(rows2, vbasis);
        const std::size_t p = rows1.size();
        const std::size_t q = k2_alive ? rows2.size() : 0;

        // Multipliers (lambda, mu) >= 0; when the k2 side is alive the images
        // sum(lambda_i a_i) and -sum(mu_j c_j) must agree on the current
        // subspace, expressed coordinatewise as equalities.
        QMatrix sys;
        for (std::size_t i = 0; i < p + q; ++i) sys.push_back(unit_vector(p + q, i));
        if (k2_alive) {
            for (std::size_t c = 0; c < vbasis.size(); ++c) {
                QVector eq = zero_vector(p + q);
                for (std::size_t i = 0; i < p; ++i) eq[i] = r1v[i][c];
                for (std::size_t j = 0; j < q; ++j) eq[p + j] = r2v[j][c];
                sys.push_back(eq);
                sys.push_back(negate(eq));
            }
        }
        const RelintPoint rp = relint_point(sys, p + q);

        QVector l = zero_vector(n);
        for (std::size_t i = 0; i < p; ++i) {
            if (rp.point[i] != 0) l = add(l, scale(rp.point[i], rows1[i]));
        }
        const QVector lv = restrict_row(l, vbasis);
        if (is_zero(lv)) {
            throw ConstructionStuckError(
                "only the zero weak separator is feasible at level " + std::to_string(level));
        }
        funcs.push_back({normalize_row(l)});

        std::vector<QVector> next;
        for (const QVector& coords : kernel_basis({lv}, vbasis.size())) {
            QVector ambient = zero_vector(n);
            for (std::size_t c = 0; c < vbasis.size(); ++c) {
                ambient = add(ambient, scale(coords[c], vbasis[c]));
            }
            next.push_back(std::move(ambient));
        }
        vbasis = std::move(next);
    }

    SeparationCertificate cert{Cortege(std::move(funcs)), false};
    if (!verify_certificate(k1, k2, cert.cortege)) {
        throw ConstructionStuckError("constructed certificate failed post-verification");
    }
    cert.verified = true;
    return cert;
}

LexHalfspace regular_extension(const MixedCone& k) {
    if (!is_asymmetric(k)) throw NotAsymmetricError();
    SeparationCertificate cert = separate(k, lineality_cone(k));
    LexHalfspace h{StepLinearFunction{cert.cortege}, Relation::Strict};
    for (const QVector& b : lineality_space(k).space.basis) {
        if (h.u.eval(b).value != 0) {
            throw ConstructionStuckError("extension does not vanish on the lineality space");
        }
    }
    return h;
}

Cortege nonmember_certificate(const MixedCone& k, const QVector& y) {
    if (y.size() != k.dim()) throw DimensionMismatchError("point has wrong dimension");
    if (!is_asymmetric(k)) throw NotAsymmetricError();
    if (member(k, y)) throw IsMemberError("point is a member; no exclusion certificate exists");

    const LinealitySpace lk = lineality_space(k);
    if (member(k, negate(y)) || lk.space.contains(y)) {
        // -y in K forces u(y) = -u(-y) < 0; y in L_K forces u(y) = 0.
        LexHalfspace h = regular_extension(k);
        if (h.u.eval(y).value > 0) {
            throw ConstructionStuckError("regular extension certificate failed sign check");
        }
        return h.u.cortege;
    }

    MixedCone hull = conv_union_ray(k, negate(y));
    SeparationCertificate cert = separate(hull, lineality_cone(k));
    StepLinearFunction u{cert.cortege};
    if (!included_in_halfspace(k, u, Relation::Strict) || u.eval(y).value > 0) {
        throw ConstructionStuckError("hull separation certificate failed sign check");
    }
    return cert.cortege;
}

}  // namespace cones
