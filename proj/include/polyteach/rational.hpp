#ifndef POLYTEACH_RATIONAL_HPP
#define POLYTEACH_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace polyteach {

/// Exact arbitrary-precision rational; always canonical (gcd-reduced,
/// positive denominator). Every geometric predicate in the library runs
/// on this scalar, never on floating point.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Arbitrary-precision integer used for counts and binomials.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" with optional leading '-'. Rejects zero denominators
/// and any trailing garbage.
Rational parseRational(const std::string& text);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string toString(const Rational& value);

/// Sign in {-1, 0, +1}.
inline int sign(const Rational& value) { return value.sign(); }

/// Decimal rendering with the given number of significant digits.
/// Only for reports; never feeds back into predicates.
std::string toDecimalString(const Rational& value, int significantDigits = 12);

inline double toDouble(const Rational& value) { return value.convert_to<double>(); }

}  // namespace polyteach

#endif
