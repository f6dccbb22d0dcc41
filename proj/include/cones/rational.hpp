#ifndef CONES_RATIONAL_HPP
#define CONES_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace cones {

/// Exact arbitrary-precision rational; canonical form (gcd 1, positive
/// denominator) is maintained by every operation this library performs.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// -1, 0 or +1.
inline int sign(const Rational& q) { return q.sign(); }

/// Parse "p/q" or "p". Accepts an optional leading minus on either part and
/// non-canonical input such as "2/4"; the result is always canonical.
Rational rational_from_string(const std::string& text);

/// Canonical serialization: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

}  // namespace cones

#endif
