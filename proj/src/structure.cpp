#include "cones/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cones/errors.hpp"
#include "cones/simplex.hpp"

namespace cones {

std::string Signature::label() const {
    std::string out;
    if (kind == Kind::TightRows) {
        out = "{";
        for (std::size_t i = 0; i < tight.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(tight[i]);
        }
        out += "}";
    } else {
        out = "(";
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (i) out += ",";
            out += levels[i] ? std::to_string(*levels[i]) : "*";
        }
        out += ")";
    }
    return out;
}

namespace {

void check_same_kind(const Signature& a, const Signature& b) {
    if (a.kind != b.kind || a.levels.size() != b.levels.size()) {
        throw std::invalid_argument("signatures come from different representations");
    }
}

// nullopt (all functionals vanish) is the lowest component, hence level +inf.
bool level_le(const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
    if (!a) return !b.has_value() ? true : false;
    if (!b) return true;
    return *a <= *b;
}

}  // namespace

bool sig_below(const Signature& a, const Signature& b) {
    check_same_kind(a, b);
    if (a.kind == Signature::Kind::TightRows) {
        return std::includes(a.tight.begin(), a.tight.end(), b.tight.begin(), b.tight.end());
    }
    for (std::size_t c = 0; c < a.levels.size(); ++c) {
        if (!level_le(b.levels[c], a.levels[c])) return false;
    }
    return true;
}

Signature sig_join(const Signature& a, const Signature& b) {
    check_same_kind(a, b);
    Signature out;
    out.kind = a.kind;
    if (a.kind == Signature::Kind::TightRows) {
        std::set_intersection(a.tight.begin(), a.tight.end(), b.tight.begin(), b.tight.end(),
                              std::back_inserter(out.tight));
    } else {
        for (std::size_t c = 0; c < a.levels.size(); ++c) {
            out.levels.push_back(level_le(a.levels[c], b.levels[c]) ? a.levels[c]
                                                                    : b.levels[c]);
        }
    }
    return out;
}

namespace {

void require_member(bool ok, const char* which) {
    if (!ok) throw NotMemberError(std::string(which) + " is not a member of the cone");
}

std::vector<std::size_t> tight_rows(const MixedCone& k, const QVector& x) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < k.system.nonstrict.size(); ++i) {
        if (dot(k.system.nonstrict[i], x) == 0) tight.push_back(i);
    }
    return tight;
}

}  // namespace

bool dominates(const MixedCone& k, const QVector& y, const QVector& x) {
    require_member(member(k, x), "x");
    require_member(member(k, y), "y");
    // x - lambda*y stays in K for small lambda iff every row tight at x does
    // not increase along -y; strict rows hold at x with slack.
    for (std::size_t i : tight_rows(k, x)) {
        if (dot(k.system.nonstrict[i], y) > 0) return false;
    }
    return true;
}

bool dominates(const StepSystemCone& k, const QVector& y, const QVector& x) {
    require_member(member(k, x), "x");
    require_member(member(k, y), "y");
    for (const StepConstraint& c : k.constraints) {
        const int s = c.u.eval_perturbed(x, y);
        if (c.relation == Relation::Strict ? s <= 0 : s < 0) return false;
    }
    return true;
}

bool equivalent(const MixedCone& k, const QVector& x, const QVector& y) {
    return dominates(k, x, y) && dominates(k, y, x);
}

bool equivalent(const StepSystemCone& k, const QVector& x, const QVector& y) {
    return dominates(k, x, y) && dominates(k, y, x);
}

Signature signature(const MixedCone& k, const QVector& x) {
    require_member(member(k, x), "x");
    Signature sig;
    sig.kind = Signature::Kind::TightRows;
    sig.tight = tight_rows(k, x);
    return sig;
}

Signature signature(const StepSystemCone& k, const QVector& x) {
    require_member(member(k, x), "x");
    Signature sig;
    sig.kind = Signature::Kind::Levels;
    for (const StepConstraint& c : k.constraints) sig.levels.push_back(c.u.eval(x).level);
    return sig;
}

ComponentWitness join_witness(const MixedCone& k, const QVector& x, const QVector& y) {
    require_member(member(k, x), "x");
    require_member(member(k, y), "y");
    QVector w = add(x, y);
    return {signature(k, w), std::move(w)};
}

ComponentWitness join_witness(const StepSystemCone& k, const QVector& x, const QVector& y) {
    require_member(member(k, x), "x");
    require_member(member(k, y), "y");
    QVector w = add(x, y);
    return {signature(k, w), std::move(w)};
}

MixedCone minimal_face(const MixedCone& k, const QVector& x) {
    require_member(member(k, x), "x");
    QMatrix nonstrict = k.system.nonstrict;
    for (std::size_t i : tight_rows(k, x)) {
        nonstrict.push_back(negate(k.system.nonstrict[i]));
    }
    return MixedCone(k.dim(), std::move(nonstrict), k.system.strict);
}

namespace {

// Indices of non-strict rows that are implicit equalities of the whole cone.
std::vector<std::size_t> implicit_nonstrict_rows(const MixedCone& k) {
    RelintPoint rp = relint_point(k.system.all_rows_relaxed(), k.dim());
    std::vector<std::size_t> implicit;
    for (std::size_t i : rp.implicit_rows) {
        if (i < k.system.nonstrict.size()) implicit.push_back(i);
    }
    return implicit;
}

}  // namespace

bool icr_member(const MixedCone& k, const QVector& x) {
    require_member(member(k, x), "x");
    const std::vector<std::size_t> implicit = implicit_nonstrict_rows(k);
    const std::vector<std::size_t> tight = tight_rows(k, x);
    return std::includes(implicit.begin(), implicit.end(), tight.begin(), tight.end());
}

bool icr_member(const StepSystemCone& k, const QVector& x, std::size_t cap) {
    const Signature sig = signature(k, x);
    SemilatticeGraph graph = enumerate_components(k, cap);
    return graph.greatest && graph.nodes[*graph.greatest].signature == sig;
}

namespace {

struct SigLess {
    bool operator()(const Signature& a, const Signature& b) const {
        if (a.kind == Signature::Kind::TightRows) {
            if (a.tight.size() != b.tight.size()) return a.tight.size() < b.tight.size();
            return a.tight < b.tight;
        }
        auto key = [](const std::optional<std::size_t>& v) {
            return v ? *v : static_cast<std::size_t>(-1);
        };
        for (std::size_t c = 0; c < a.levels.size(); ++c) {
            if (key(a.levels[c]) != key(b.levels[c])) {
                return key(a.levels[c]) < key(b.levels[c]);
            }
        }
        return false;
    }
};

SemilatticeGraph assemble_graph(std::vector<ComponentWitness> nodes) {
    std::sort(nodes.begin(), nodes.end(), [](const ComponentWitness& a, const ComponentWitness& b) {
        return SigLess{}(a.signature, b.signature);
    });

    SemilatticeGraph graph;
    graph.nodes = std::move(nodes);
    const std::size_t n = graph.nodes.size();

    std::map<Signature, std::size_t, SigLess> index;
    for (std::size_t i = 0; i < n; ++i) index[graph.nodes[i].signature] = i;

    auto strictly_below = [&](std::size_t a, std::size_t b) {
        return a != b && sig_below(graph.nodes[a].signature, graph.nodes[b].signature);
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!strictly_below(a, b)) continue;
            bool covering = true;
            for (std::size_t c = 0; c < n && covering; ++c) {
                if (strictly_below(a, c) && strictly_below(c, b)) covering = false;
            }
            if (covering) graph.edges.emplace_back(a, b);
        }
    }

    graph.join.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(sig_join(graph.nodes[a].signature, graph.nodes[b].signature));
            if (it == index.end()) {
                throw std::logic_error("join of attained components must be attained");
            }
            graph.join[a][b] = it->second;
        }
    }

    for (std::size_t g = 0; g < n; ++g) {
        bool top = true;
        for (std::size_t a = 0; a < n && top; ++a) {
            if (!sig_below(graph.nodes[a].signature, graph.nodes[g].signature)) top = false;
        }
        if (top) {
            graph.greatest = g;
            break;
        }
    }
    return graph;
}

}  // namespace

SemilatticeGraph enumerate_components(const MixedCone& k, std::size_t cap) {
    const std::size_t m = k.system.nonstrict.size();
    if (m >= 64 || (std::size_t(1) << m) > cap) {
        throw CandidateBlowupError(m >= 64 ? cap + 1 : (std::size_t(1) << m), cap);
    }
    std::vector<ComponentWitness> nodes;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        HomSystem candidate;
        candidate.dim = k.dim();
        candidate.strict = k.system.strict;
        Signature sig;
        sig.kind = Signature::Kind::TightRows;
        for (std::size_t i = 0; i < m; ++i) {
            const QVector& row = k.system.nonstrict[i];
            if (mask & (std::size_t(1) << i)) {
                candidate.nonstrict.push_back(row);
                candidate.nonstrict.push_back(negate(row));
                sig.tight.push_back(i);
            } else {
                candidate.strict.push_back(row);
            }
        }
        if (std::optional<QVector> w = feasible_mixed(candidate)) {
            nodes.push_back({std::move(sig), std::move(*w)});
        }
    }
    if (nodes.empty()) throw EmptyConeError();
    return assemble_graph(std::move(nodes));
}

SemilatticeGraph enumerate_components(const StepSystemCone& k, std::size_t cap) {
    std::vector<ComponentWitness> nodes;
    for (const LevelAssignment& a : all_level_assignments(k, cap)) {
        if (std::optional<QVector> w = nonempty_witness(assignment_cone(k, a))) {
            Signature sig;
            sig.kind = Signature::Kind::Levels;
            sig.levels = a.levels;
            nodes.push_back({std::move(sig), std::move(*w)});
        }
    }
    if (nodes.empty()) throw EmptyConeError();
    return assemble_graph(std::move(nodes));
}

SemilatticeGraph enumerate_components(const LexHalfspace& k, std::size_t cap) {
    return enumerate_components(as_step_system(k), cap);
}

SemilatticeGraph enumerate_components(const Cone& k, std::size_t cap) {
    return std::visit([cap](const auto& c) { return enumerate_components(c, cap); }, k);
}

}  // namespace cones
