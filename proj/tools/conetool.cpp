// File-driven front end: parse cones, corteges and points, run structure and
// separation queries, emit JSON results or DOT graphs. Exit codes: 0 success,
// 1 domain error, 2 parse/usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cones/errors.hpp"
#include "cones/json_io.hpp"
#include "cones/separation.hpp"
#include "cones/structure.hpp"

namespace {

using cones::Cone;
using cones::Json;
using cones::MixedCone;
using cones::QVector;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw cones::ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw cones::ParseError("invalid JSON in " + what + ": " + e.what());
    }
}

/// Inline JSON, or @file indirection.
Json argument_json(const std::string& arg, const std::string& what) {
    if (!arg.empty() && arg[0] == '@') return parse_json_text(read_input(arg.substr(1)), what);
    return parse_json_text(arg, what);
}

Cone load_cone(const std::string& path) {
    return cones::parse_cone(parse_json_text(read_input(path), "cone '" + path + "'"));
}

MixedCone require_mixed(const Cone& k, const char* command) {
    if (const auto* m = std::get_if<MixedCone>(&k)) return *m;
    throw cones::ParseError(std::string(command) + " requires a mixed cone input");
}

cones::StepSystemCone as_system(const Cone& k) {
    return std::visit([](const auto& c) { return cones::as_step_system(c); }, k);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    std::string cone_path;
    std::string k2_path;
    std::string point_arg;
    std::string x_arg;
    std::string y_arg;
    std::string output = "json";
    bool dot = false;
    std::size_t cap = cones::kDefaultCandidateCap;
    // Reserved for sampling-based queries; accepted so identical requests can
    // pin it, every current command is deterministic without it.
    unsigned long long seed = 0;
    std::string op;
    std::string which = "orthant";
    std::string level;
    std::string vector_arg;
};

int dispatch(const std::string& command, const Options& opt) {
    if (command == "member") {
        const Cone k = load_cone(opt.cone_path);
        const QVector x = cones::parse_point(argument_json(opt.point_arg, "--point"));
        emit({{"member", cones::member(k, x)}});
        return 0;
    }
    if (command == "dominates") {
        const Cone k = load_cone(opt.cone_path);
        const QVector y = cones::parse_point(argument_json(opt.y_arg, "--y"));
        const QVector x = cones::parse_point(argument_json(opt.x_arg, "--x"));
        const bool result =
            std::holds_alternative<MixedCone>(k)
                ? cones::dominates(std::get<MixedCone>(k), y, x)
                : cones::dominates(as_system(k), y, x);
        emit({{"dominates", result}});
        return 0;
    }
    if (command == "signature") {
        const Cone k = load_cone(opt.cone_path);
        const QVector x = cones::parse_point(argument_json(opt.point_arg, "--point"));
        const cones::Signature sig = std::holds_alternative<MixedCone>(k)
                                         ? cones::signature(std::get<MixedCone>(k), x)
                                         : cones::signature(as_system(k), x);
        Json j;
        j["signature"] = cones::signature_json(sig);
        j["label"] = sig.label();
        emit(j);
        return 0;
    }
    if (command == "components") {
        const Cone k = load_cone(opt.cone_path);
        const cones::SemilatticeGraph g = cones::enumerate_components(k, opt.cap);
        if (opt.dot || opt.output == "dot") {
            std::cout << cones::graph_dot(g);
        } else {
            emit(cones::graph_json(g));
        }
        return 0;
    }
    if (command == "icr") {
        const Cone k = load_cone(opt.cone_path);
        const QVector x = cones::parse_point(argument_json(opt.point_arg, "--point"));
        const bool result = std::holds_alternative<MixedCone>(k)
                                ? cones::icr_member(std::get<MixedCone>(k), x)
                                : cones::icr_member(as_system(k), x, opt.cap);
        emit({{"icr_member", result}});
        return 0;
    }
    if (command == "face") {
        const MixedCone k = require_mixed(load_cone(opt.cone_path), "face");
        const QVector x = cones::parse_point(argument_json(opt.point_arg, "--point"));
        emit(cones::cone_json(cones::minimal_face(k, x)));
        return 0;
    }
    if (command == "halfspace-components") {
        const Cone k = load_cone(opt.cone_path);
        const auto* h = std::get_if<cones::LexHalfspace>(&k);
        if (!h) throw cones::ParseError("halfspace-components requires a lex cone input");
        emit(cones::chain_json(cones::halfspace_components(*h)));
        return 0;
    }
    if (command == "separate") {
        const MixedCone k1 = require_mixed(load_cone(opt.cone_path), "separate");
        const MixedCone k2 = require_mixed(load_cone(opt.k2_path), "separate");
        emit(cones::certificate_json(cones::separate(k1, k2)));
        return 0;
    }
    if (command == "extend") {
        const MixedCone k = require_mixed(load_cone(opt.cone_path), "extend");
        const cones::LexHalfspace h = cones::regular_extension(k);
        emit(cones::cone_json(h));
        return 0;
    }
    if (command == "certify") {
        const MixedCone k = require_mixed(load_cone(opt.cone_path), "certify");
        const QVector y = cones::parse_point(argument_json(opt.point_arg, "--point"));
        const cones::Cortege u = cones::nonmember_certificate(k, y);
        Json j;
        j["cortege"] = cones::cortege_json(u);
        j["member"] = false;
        j["value_at_point"] =
            cones::rational_json(cones::StepLinearFunction{u}.eval(y).value);
        emit(j);
        return 0;
    }
    if (command == "infdim") {
        namespace inf = cones::infdim;
        if (opt.op == "ext-signature") {
            const auto v = cones::parse_finsupp(argument_json(opt.vector_arg, "--vector"));
            emit({{"signature", cones::ext_signature_json(inf::ext_signature(v))}});
            return 0;
        }
        if (opt.op == "ext-dominates" || opt.op == "orthant-dominates") {
            const auto y = cones::parse_finsupp(argument_json(opt.y_arg, "--y"));
            const auto x = cones::parse_finsupp(argument_json(opt.x_arg, "--x"));
            const bool result = opt.op == "ext-dominates" ? inf::ext_dominates(y, x)
                                                          : inf::orthant_dominates(y, x);
            emit({{"dominates", result}});
            return 0;
        }
        if (opt.op == "witness") {
            std::optional<long long> level;
            if (opt.level != "+inf") {
                try {
                    level = std::stoll(opt.level);
                } catch (const std::exception&) {
                    throw cones::ParseError("--level must be an integer or \"+inf\"");
                }
            }
            emit({{"vector", cones::finsupp_json(inf::component_witness(level))}});
            return 0;
        }
        if (opt.op == "orthant-signature") {
            const auto v = cones::parse_finsupp(argument_json(opt.vector_arg, "--vector"));
            const auto support = inf::orthant_signature(v);
            Json j;
            j["member"] = support.has_value();
            if (support) {
                Json idx = Json::array();
                for (const inf::ExtIndex& i : *support) {
                    if (i.plus_inf) {
                        idx.push_back("+inf");
                    } else {
                        idx.push_back(i.i);
                    }
                }
                j["support"] = std::move(idx);
            } else {
                j["support"] = nullptr;
            }
            emit(j);
            return 0;
        }
        if (opt.op == "empty-icr") {
            const auto v = cones::parse_finsupp(argument_json(opt.vector_arg, "--vector"));
            const inf::EmptyIcrCone which = opt.which == "hat-face"
                                                ? inf::EmptyIcrCone::HatFace
                                                : inf::EmptyIcrCone::Orthant;
            if (opt.which != "hat-face" && opt.which != "orthant") {
                throw cones::ParseError("--which must be \"orthant\" or \"hat-face\"");
            }
            emit({{"witness", cones::finsupp_json(inf::empty_icr_witness(which, v))}});
            return 0;
        }
        throw cones::ParseError("unknown infdim op \"" + opt.op + "\"");
    }
    throw cones::ParseError("unknown command \"" + command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic structure of convex cones: dominance, open "
                 "components, semilattices, faces, step-linear halfspaces and "
                 "separation certificates."};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "Random seed (reserved; queries are deterministic)");

    auto add_cone_command = [&](const std::string& name, const std::string& desc,
                                bool second_cone = false) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("cone", opt.cone_path, "Cone JSON file ('-' for stdin)")->required();
        if (second_cone) {
            sub->add_option("cone2", opt.k2_path, "Second cone JSON file")->required();
        }
        return sub;
    };

    add_cone_command("member", "Exact membership test")
        ->add_option("--point", opt.point_arg, "Point (inline JSON or @file)")
        ->required();
    CLI::App* dom = add_cone_command("dominates", "Does x dominate y (y <= x in the cone)");
    dom->add_option("--y", opt.y_arg, "Dominated point")->required();
    dom->add_option("--x", opt.x_arg, "Dominating point")->required();
    CLI::App* sig = add_cone_command("signature", "Canonical component label of a member");
    sig->add_option("--point", opt.point_arg, "Point")->required();
    CLI::App* comp = add_cone_command("components", "Open components and their semilattice");
    comp->add_flag("--dot", opt.dot, "Emit a DOT Hasse diagram");
    comp->add_option("--output", opt.output, "Output format: json or dot");
    comp->add_option("--cap", opt.cap, "Candidate enumeration cap");
    add_cone_command("icr", "Intrinsic-core membership")
        ->add_option("--point", opt.point_arg, "Point")
        ->required();
    add_cone_command("face", "Minimal face containing a point")
        ->add_option("--point", opt.point_arg, "Point")
        ->required();
    add_cone_command("halfspace-components", "Component chain of a strict lex halfspace");
    add_cone_command("separate", "Step-linear separation certificate for disjoint cones",
                     true);
    add_cone_command("extend", "Regular extension to a strict conical halfspace");
    add_cone_command("certify", "Non-membership certificate for a point")
        ->add_option("--point", opt.point_arg, "Point")
        ->required();

    CLI::App* infd = app.add_subcommand("infdim", "Finitely-supported infinite-dim models");
    infd->add_option("--op", opt.op,
                     "ext-signature | ext-dominates | witness | orthant-signature | "
                     "orthant-dominates | empty-icr")
        ->required();
    infd->add_option("--vector", opt.vector_arg, "Vector (inline JSON or @file)");
    infd->add_option("--y", opt.y_arg, "Dominated vector");
    infd->add_option("--x", opt.x_arg, "Dominating vector");
    infd->add_option("--level", opt.level, "Component level: integer or \"+inf\"");
    infd->add_option("--which", opt.which, "orthant | hat-face");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const cones::ParseError& e) {
        emit({{"error", e.code()}, {"detail", e.what()}});
        return 2;
    } catch (const cones::ConeError& e) {
        emit({{"error", e.code()}, {"detail", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        emit({{"error", "internal_error"}, {"detail", e.what()}});
        return 1;
    }
}
