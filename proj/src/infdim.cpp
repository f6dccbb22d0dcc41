#include "cones/infdim.hpp"

#include <algorithm>

#include "cones/errors.hpp"

namespace cones::infdim {

FinSuppVector basis_vector(const ExtIndex& idx) { return {{idx, Rational(1)}}; }

FinSuppVector fsv_add(const FinSuppVector& a, const FinSuppVector& b) {
    FinSuppVector out = a;
    for (const auto& [idx, v] : b) {
        Rational& slot = out[idx];
        slot += v;
        if (slot == 0) out.erase(idx);
    }
    return out;
}

FinSuppVector fsv_scale(const Rational& t, const FinSuppVector& a) {
    FinSuppVector out;
    if (t == 0) return out;
    for (const auto& [idx, v] : a) out.emplace(idx, t * v);
    return out;
}

bool ext_sig_le(const ExtSignature& a, const ExtSignature& b) {
    using Kind = ExtSignature::Kind;
    if (a.kind == Kind::NotMember || b.kind == Kind::NotMember) {
        throw NotMemberError("signatures of non-members are not ordered");
    }
    if (a.kind == Kind::Lineality) return true;
    if (b.kind == Kind::Lineality) return false;
    if (b.kind == Kind::LevelInf) return true;
    if (a.kind == Kind::LevelInf) return false;
    return a.level <= b.level;
}

ExtSignature ext_signature(const FinSuppVector& x) {
    Rational total_int = 0;  // sum of all integer coordinates
    Rational at_inf = 0;
    std::vector<std::pair<long long, Rational>> ints;  // ascending by map order
    for (const auto& [idx, v] : x) {
        if (idx.plus_inf) {
            at_inf = v;
        } else {
            ints.emplace_back(idx.i, v);
            total_int += v;
        }
    }
    const Rational l_inf = at_inf + total_int;
    if (l_inf > 0) return {ExtSignature::Kind::LevelInf, 0};
    if (l_inf < 0) return {ExtSignature::Kind::NotMember, 0};
    if (ints.empty()) return {ExtSignature::Kind::Lineality, 0};
    if (total_int != 0) {
        // The prefix functional keeps this value for every index above the
        // support, so no level has all higher functionals vanishing.
        return {ExtSignature::Kind::NotMember, 0};
    }

    // Prefix sums are constant between support indices: the value on
    // [a_{j-1}, a_j) extends up to a_j - 1, so the first nonzero prefix found
    // from above decides the level.
    Rational prefix = total_int;
    for (std::size_t j = ints.size(); j-- > 1;) {
        prefix -= ints[j].second;
        if (prefix != 0) {
            if (prefix > 0) return {ExtSignature::Kind::Level, ints[j].first - 1};
            return {ExtSignature::Kind::NotMember, 0};
        }
    }
    return {ExtSignature::Kind::Lineality, 0};
}

bool ext_dominates(const FinSuppVector& y, const FinSuppVector& x) {
    const ExtSignature sy = ext_signature(y);
    const ExtSignature sx = ext_signature(x);
    if (sy.kind == ExtSignature::Kind::NotMember) throw NotMemberError("y is not a member");
    if (sx.kind == ExtSignature::Kind::NotMember) throw NotMemberError("x is not a member");
    return ext_sig_le(sy, sx);
}

FinSuppVector component_witness(const std::optional<long long>& m) {
    if (!m) return basis_vector(ExtIndex::infinity());
    FinSuppVector w = basis_vector(ExtIndex::integer(*m));
    w[ExtIndex::integer(*m + 1)] = -1;
    return w;
}

std::optional<std::vector<ExtIndex>> orthant_signature(const FinSuppVector& x) {
    std::vector<ExtIndex> support;
    for (const auto& [idx, v] : x) {
        if (v < 0) return std::nullopt;
        if (v > 0) support.push_back(idx);
    }
    if (support.empty()) return std::nullopt;  // the orthant cone excludes 0
    return support;
}

bool orthant_dominates(const FinSuppVector& y, const FinSuppVector& x) {
    const auto iy = orthant_signature(y);
    if (!iy) throw NotMemberError("y is not a member");
    const auto ix = orthant_signature(x);
    if (!ix) throw NotMemberError("x is not a member");
    return std::includes(ix->begin(), ix->end(), iy->begin(), iy->end());
}

FinSuppVector empty_icr_witness(EmptyIcrCone which, const FinSuppVector& x) {
    if (which == EmptyIcrCone::Orthant) {
        const auto ix = orthant_signature(x);
        if (!ix) throw NotMemberError("x is not a member of the orthant cone");
        // Smallest positive integer index outside the support.
        long long fresh = 1;
        for (const ExtIndex& idx : *ix) {
            if (!idx.plus_inf && idx.i == fresh) ++fresh;
        }
        return basis_vector(ExtIndex::integer(fresh));
    }
    const ExtSignature sig = ext_signature(x);
    if (sig.kind != ExtSignature::Kind::Level) {
        throw NotMemberError("x is not a member of the face below the top component");
    }
    return component_witness(sig.level + 1);
}

}  // namespace cones::infdim
