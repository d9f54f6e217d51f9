#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aml/errors.hpp"

namespace aml {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// There is no floating-point representation anywhere in this library.
using Rational = boost::multiprecision::cpp_rational;

/// A point of affine space with exact rational coordinates.
using Point = std::vector<Rational>;

inline std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// r^e with e any integer; 0^0 = 1 by convention, 0^negative is rejected.
inline Rational rational_pow(const Rational& base, std::int64_t exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0) {
        if (exponent < 0)
            throw evaluation_error("zero raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    std::uint64_t e = exponent < 0
                          ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                          : static_cast<std::uint64_t>(exponent);
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    if (exponent < 0) acc = Rational(1) / acc;
    return acc;
}

inline std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(p[i]);
    }
    out += ")";
    return out;
}

}  // namespace aml
