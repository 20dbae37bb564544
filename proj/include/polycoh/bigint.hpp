#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polycoh {

// All integer linear algebra runs on arbitrary precision integers; SNF
// intermediates overflow 64 bits already on small dense inputs.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

}  // namespace polycoh
