#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace glblocks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp)
{
    BigInt result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

/// "p/q" with q > 0; integers are written without a denominator.
inline std::string to_string(const Rational& r)
{
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline BigInt to_integer(const Rational& r)
{
    if (!is_integer(r)) throw std::logic_error("non-integral value " + to_string(r));
    return boost::multiprecision::numerator(r);
}

}  // namespace glblocks
