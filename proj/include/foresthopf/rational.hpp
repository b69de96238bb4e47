#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "foresthopf/errors.hpp"

namespace foresthopf {

// Exact arithmetic throughout: arbitrary-precision rationals, always reduced,
// denominator positive. No floating point anywhere in the algebra.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accepts "p" or "p/q" with an optional leading sign on p.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw FormatError("empty rational");
    const auto slash = s.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(s);
        } else {
            num = BigInt(s.substr(0, slash));
            den = BigInt(s.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw FormatError("bad rational '" + s + "'");
    }
    if (den == 0) throw FormatError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace foresthopf
