#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wschub {

// Exact arbitrary-precision arithmetic. Every coefficient in the engine is a
// Rational; there is no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) {
    return q.str();  // "p" or "p/q", always reduced, denominator > 0
}

inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
}

}  // namespace wschub
