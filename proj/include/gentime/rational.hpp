#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "gentime/errors.hpp"

namespace gentime {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" (q > 0 after normalization) or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw validation_error("rational denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("malformed rational: " + text);
    }
}

/// Canonical rendering: always "p/q" with q > 0, including "p/1".
inline std::string render_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace gentime
