#ifndef NOVIKOV_RATIONAL_HPP
#define NOVIKOV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "novikov/errors.hpp"

namespace novikov {

// Exact coefficient field. cpp_rational keeps denominator > 0 and
// gcd(|num|, den) = 1 after every operation; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
inline Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw malformed_input("empty rational literal");
    try {
        std::string s(text);
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw malformed_input("zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw malformed_input("bad rational literal '" + std::string(text) + "'");
    }
}

}  // namespace novikov

#endif
