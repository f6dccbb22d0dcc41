#include "cones/json_io.hpp"

#include <sstream>

#include "cones/errors.hpp"

namespace cones {

Rational parse_rational(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational as string or integer, got " + j.dump());
}

Json rational_json(const Rational& q) { return rational_to_string(q); }

QVector parse_point(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    QVector v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(parse_rational(e));
    return v;
}

Json point_json(const QVector& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(rational_json(q));
    return out;
}

QMatrix parse_matrix(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rows");
    QMatrix m;
    for (const Json& row : j) m.push_back(parse_point(row));
    return m;
}

Json matrix_json(const QMatrix& m) {
    Json out = Json::array();
    for (const QVector& row : m) out.push_back(point_json(row));
    return out;
}

namespace {

Relation parse_relation(const Json& j) {
    const std::string s = j.get<std::string>();
    if (s == "gt") return Relation::Strict;
    if (s == "ge") return Relation::NonStrict;
    throw ParseError("relation must be \"gt\" or \"ge\", got \"" + s + "\"");
}

std::string relation_string(Relation r) { return r == Relation::Strict ? "gt" : "ge"; }

StepLinearFunction parse_step_function(const Json& rows) {
    QMatrix m = parse_matrix(rows);
    if (m.empty()) throw ParseError("cortege must have at least one functional");
    std::vector<LinearFunctional> fs;
    for (QVector& row : m) fs.push_back({std::move(row)});
    return StepLinearFunction{Cortege(std::move(fs))};
}

}  // namespace

Cone parse_cone(const Json& j) {
    if (!j.is_object() || !j.contains("type")) throw ParseError("cone must carry a \"type\"");
    const std::string type = j.at("type").get<std::string>();
    try {
        if (type == "mixed") {
            const std::size_t dim = j.at("dim").get<std::size_t>();
            QMatrix nonstrict =
                j.contains("nonstrict") ? parse_matrix(j.at("nonstrict")) : QMatrix{};
            QMatrix strict = j.contains("strict") ? parse_matrix(j.at("strict")) : QMatrix{};
            return MixedCone(dim, std::move(nonstrict), std::move(strict));
        }
        if (type == "lex") {
            LexHalfspace h{parse_step_function(j.at("cortege")),
                           parse_relation(j.at("relation"))};
            return h;
        }
        if (type == "system") {
            StepSystemCone k;
            for (const Json& c : j.at("constraints")) {
                k.constraints.push_back({parse_step_function(c.at("cortege")),
                                         parse_relation(c.at("relation"))});
            }
            if (k.constraints.empty()) {
                if (!j.contains("dim")) {
                    throw ParseError("empty constraint system needs an explicit \"dim\"");
                }
                k.dim = j.at("dim").get<std::size_t>();
            } else {
                k.dim = k.constraints.front().u.dim();
                for (const StepConstraint& c : k.constraints) {
                    if (c.u.dim() != k.dim) {
                        throw ParseError("constraints have mixed dimensions");
                    }
                }
            }
            return k;
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed cone: ") + e.what());
    } catch (const ConeError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid cone: ") + e.what());
    }
    throw ParseError("unknown cone type \"" + type + "\"");
}

Json cone_json(const MixedCone& k) {
    Json j;
    j["type"] = "mixed";
    j["dim"] = k.dim();
    j["nonstrict"] = matrix_json(k.system.nonstrict);
    j["strict"] = matrix_json(k.system.strict);
    return j;
}

Json cone_json(const LexHalfspace& k) {
    Json j;
    j["type"] = "lex";
    j["relation"] = relation_string(k.relation);
    j["cortege"] = cortege_json(k.u.cortege);
    return j;
}

Json cone_json(const StepSystemCone& k) {
    Json j;
    j["type"] = "system";
    j["dim"] = k.dim;
    Json constraints = Json::array();
    for (const StepConstraint& c : k.constraints) {
        Json jc;
        jc["relation"] = relation_string(c.relation);
        jc["cortege"] = cortege_json(c.u.cortege);
        constraints.push_back(std::move(jc));
    }
    j["constraints"] = std::move(constraints);
    return j;
}

Json cone_json(const Cone& k) {
    return std::visit([](const auto& c) { return cone_json(c); }, k);
}

Cortege parse_cortege(const Json& j) {
    try {
        const Json& rows = j.is_object() ? j.at("cortege") : j;
        StepLinearFunction u = parse_step_function(rows);
        if (j.is_object() && j.contains("dim") &&
            j.at("dim").get<std::size_t>() != u.dim()) {
            throw ParseError("cortege dimension field disagrees with its rows");
        }
        return u.cortege;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed cortege: ") + e.what());
    }
}

Json cortege_json(const Cortege& c) {
    Json rows = Json::array();
    for (const LinearFunctional& f : c.functionals()) rows.push_back(point_json(f.coeffs));
    return rows;
}

Json subspace_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim;
    j["dim"] = s.dim();
    j["basis"] = matrix_json(s.basis);
    return j;
}

Json signature_json(const Signature& s) {
    Json j;
    if (s.kind == Signature::Kind::TightRows) {
        j["kind"] = "tight";
        j["rows"] = s.tight;
    } else {
        j["kind"] = "levels";
        Json levels = Json::array();
        for (const auto& l : s.levels) {
            if (l) {
                levels.push_back(*l);
            } else {
                levels.push_back(nullptr);
            }
        }
        j["levels"] = std::move(levels);
    }
    return j;
}

Json certificate_json(const SeparationCertificate& c) {
    Json j;
    j["cortege"] = cortege_json(c.cortege);
    j["verified"] = c.verified;
    j["k1"] = "gt0";
    j["k2"] = "le0";
    return j;
}

Json chain_json(const HalfspaceChain& chain) {
    Json j;
    Json comps = Json::array();
    for (const HalfspaceComponent& c : chain.components) {
        Json jc;
        jc["level"] = c.level;
        jc["cone"] = cone_json(c.cone);
        jc["lin"] = subspace_json(c.lin);
        jc["lineality"] = subspace_json(c.lineality);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    j["lineality"] = subspace_json(chain.lineality);
    j["algebraic_open"] = chain.components.size() == 1;
    j["linear_representation"] =
        chain.components.size() == 1
            ? Json(point_json(chain.components.front().cone.system.strict.at(0)))
            : Json(nullptr);
    return j;
}

Json graph_json(const SemilatticeGraph& g) {
    Json j;
    Json nodes = Json::array();
    for (const ComponentWitness& n : g.nodes) {
        Json jn;
        jn["signature"] = signature_json(n.signature);
        jn["label"] = n.signature.label();
        jn["witness"] = point_json(n.witness);
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& [lo, hi] : g.edges) edges.push_back(Json::array({lo, hi}));
    j["edges"] = std::move(edges);
    j["join"] = g.join;
    if (g.greatest) {
        j["greatest"] = *g.greatest;
    } else {
        j["greatest"] = nullptr;
    }
    j["icr_nonempty"] = g.greatest.has_value();
    return j;
}

std::string graph_dot(const SemilatticeGraph& g) {
    std::ostringstream os;
    os << "digraph components {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << g.nodes[i].signature.label() << "\"";
        if (g.greatest && *g.greatest == i) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& [lo, hi] : g.edges) {
        os << "  n" << lo << " -> n" << hi << ";\n";
    }
    os << "}\n";
    return os.str();
}

infdim::FinSuppVector parse_finsupp(const Json& j) {
    if (!j.is_object() || !j.contains("coords")) {
        throw ParseError("finitely supported vector needs a \"coords\" object");
    }
    infdim::FinSuppVector v;
    for (const auto& [key, value] : j.at("coords").items()) {
        infdim::ExtIndex idx;
        if (key == "+inf") {
            idx = infdim::ExtIndex::infinity();
        } else {
            try {
                idx = infdim::ExtIndex::integer(std::stoll(key));
            } catch (const std::exception&) {
                throw ParseError("invalid coordinate index \"" + key + "\"");
            }
        }
        Rational q = parse_rational(value);
        if (q != 0) v.emplace(idx, std::move(q));
    }
    return v;
}

Json finsupp_json(const infdim::FinSuppVector& v) {
    Json coords = Json::object();
    for (const auto& [idx, q] : v) {
        coords[idx.plus_inf ? "+inf" : std::to_string(idx.i)] = rational_json(q);
    }
    Json j;
    j["coords"] = std::move(coords);
    return j;
}

Json ext_signature_json(const infdim::ExtSignature& s) {
    using Kind = infdim::ExtSignature::Kind;
    Json j;
    switch (s.kind) {
        case Kind::NotMember: j["kind"] = "not_member"; break;
        case Kind::Lineality: j["kind"] = "lineality"; break;
        case Kind::LevelInf: j["kind"] = "level_inf"; break;
        case Kind::Level:
            j["kind"] = "level";
            j["level"] = s.level;
            break;
    }
    return j;
}

}  // namespace cones
