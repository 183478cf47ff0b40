#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lagconf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(Integer(num), Integer(den));
}

/** Parse "p/q", "p", or a decimal like "0.25" into an exact rational. */
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("rational: cannot parse '" + s + "'");
        Integer num(digits);
        Integer den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(num, den);
    }
    return Rational(Integer(s));
}

/** Canonical form: reduced "p/q", or bare "p" when the denominator is 1. */
inline std::string rational_to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer rational_floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

/** An optional rational used for truncation orders; empty means +infinity. */
using OrderBound = std::optional<Rational>;

inline bool order_lt(const OrderBound& a, const OrderBound& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}

inline OrderBound order_min(const OrderBound& a, const OrderBound& b) {
    return order_lt(a, b) ? a : b;
}

inline OrderBound order_add(const OrderBound& a, const OrderBound& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

}  // namespace lagconf
