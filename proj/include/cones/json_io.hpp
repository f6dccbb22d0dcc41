#ifndef CONES_JSON_IO_HPP
#define CONES_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "cones/cone.hpp"
#include "cones/infdim.hpp"
#include "cones/separation.hpp"
#include "cones/structure.hpp"

namespace cones {

using Json = nlohmann::json;

// Rationals travel as canonical "p/q" strings; exact JSON integers are
// accepted on input, floats are rejected.
Rational parse_rational(const Json& j);
Json rational_json(const Rational& q);

QVector parse_point(const Json& j);
Json point_json(const QVector& v);
QMatrix parse_matrix(const Json& j);
Json matrix_json(const QMatrix& m);

/// {"type":"mixed"|"lex"|"system", ...}
Cone parse_cone(const Json& j);
Json cone_json(const MixedCone& k);
Json cone_json(const LexHalfspace& k);
Json cone_json(const StepSystemCone& k);
Json cone_json(const Cone& k);

/// {"dim": n, "cortege": [[...], ...]}
Cortege parse_cortege(const Json& j);
Json cortege_json(const Cortege& c);

Json subspace_json(const Subspace& s);
Json signature_json(const Signature& s);
Json certificate_json(const SeparationCertificate& c);
Json chain_json(const HalfspaceChain& chain);

Json graph_json(const SemilatticeGraph& g);
/// Hasse diagram; nodes carry signature labels, the greatest (intrinsic core)
/// node is doubly circled.
std::string graph_dot(const SemilatticeGraph& g);

infdim::FinSuppVector parse_finsupp(const Json& j);
Json finsupp_json(const infdim::FinSuppVector& v);
Json ext_signature_json(const infdim::ExtSignature& s);

}  // namespace cones

#endif
