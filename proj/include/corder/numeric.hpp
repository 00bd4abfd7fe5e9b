#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace corder {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(a / b), b > 0.  cpp_int division truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// a mod b normalized into [0, b), b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

// Fractional part of q in [0, 1).
inline Rat frac_part(const Rat& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);
    return Rat(mod_floor(n, d), d);
}

}  // namespace corder
