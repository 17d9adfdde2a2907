#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace toricgw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_pow(const Integer& base, unsigned exp) {
    Integer r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        Rational inv = Rational(1) / base;
        return rat_pow(inv, -exp);
    }
    Rational r = 1, b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: value is not integral");
    return numerator(r);
}

// Text form "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("parse_rational: malformed rational '" + s + "'");
    }
}

inline std::string rational_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace toricgw
