#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "svdyn/errors.hpp"

namespace svdyn {

// Exact rational scalar. Stored in lowest terms with positive denominator;
// all arithmetic is exact. Coordinates of every geometric object use this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

inline const Rational& rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline const Rational& rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// "p/q" with q omitted when 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Accepts "p", "p/q", optional leading sign. Normalizes to lowest terms.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        BigInt n(ns), d(ds);
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Decimal expansion with the given number of significant digits, round half up.
// Used only at plot emission; nothing downstream consumes the result exactly.
std::string to_decimal_string(const Rational& q, int significant_digits);

} // namespace svdyn
