#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "acbm/errors.hpp"

namespace acbm {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form the rest of
/// the engine relies on: gcd-reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

/// Renders "n" when the denominator is 1, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "[-]digits[/digits]". Whole string must match.
Rational parse_rational(std::string_view text);

}  // namespace acbm
