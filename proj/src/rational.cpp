#include "polyteach/rational.hpp"

#include <cctype>
#include <sstream>

namespace polyteach {

namespace {

bool isInteger(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parseRational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!isInteger(text)) throw ParseError("not a rational: '" + text + "'");
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!isInteger(num) || !isInteger(den)) {
        throw ParseError("not a rational: '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    if (d < 0) throw ParseError("negative denominator: '" + text + "'");
    return Rational(BigInt(num), d);
}

std::string toString(const Rational& value) {
    // mpq_rational::str() already prints "p" or "p/q" in canonical form.
    return value.str();
}

std::string toDecimalString(const Rational& value, int significantDigits) {
    std::ostringstream out;
    out.precision(significantDigits);
    out << value.convert_to<double>();
    return out.str();
}

}  // namespace polyteach
