#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace farey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string toString(const BigInt& x) { return x.str(); }

std::string toString(const Rational& x);

// Parses "p/q" or "p" into an exact rational (sign allowed).
Rational parseRational(const std::string& text);

inline BigInt pow2(std::int64_t n) { return BigInt(1) << static_cast<unsigned>(n); }

inline BigInt pow3(std::int64_t n) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < n; ++i) r *= 3;
    return r;
}

}  // namespace farey
