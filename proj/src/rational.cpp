#include "cones/rational.hpp"

#include "cones/errors.hpp"

namespace cones {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
    try {
        return Integer(text);
    } catch (const std::runtime_error&) {
        throw ParseError("invalid rational '" + whole + "'");
    }
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in rational '" + text + "'");
    }
    // The two-argument constructor canonicalizes; plain string construction
    // of mpq does not.
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace cones
