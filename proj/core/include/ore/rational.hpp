#ifndef ORE_RATIONAL_HPP
#define ORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ore {

/// Arbitrary-precision integers and canonical rationals (gcd(num, den) = 1, den > 0).
using Integer = mpz_class;
using Rational = mpq_class;

/// "p" or "p/q"; the same form parse_rational accepts.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "[-]p" or "[-]p/q"; throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace ore

#endif  // ORE_RATIONAL_HPP
