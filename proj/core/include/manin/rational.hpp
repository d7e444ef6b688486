#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace manin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// q^e for integer e of either sign.
inline Rational q_pow(long long q, long long e) {
    BigInt num = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) num *= q;
    if (e >= 0) return Rational(num);
    return Rational(1) / Rational(num);
}

inline BigInt int_pow(long long q, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace manin
