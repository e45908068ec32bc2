#pragma once

#include <boost/rational.hpp>

#include <cstdint>

namespace rhythmprint {

/// Exact quarter-length arithmetic: a quarter note is 1, a whole note is 4.
/// Kept rational so tuplet durations (e.g. 1/3) survive parsing losslessly.
using Ql = boost::rational<std::int64_t>;

inline double to_double(const Ql& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline Ql ql_abs(const Ql& q) { return q < Ql(0) ? -q : q; }

/// Nearest integer with ties rounded to the even neighbour.
inline std::int64_t round_half_even(const Ql& q) {
    const std::int64_t n = q.numerator();
    const std::int64_t d = q.denominator();  // normalized, always > 0
    const std::int64_t fl = n >= 0 ? n / d : -((-n + d - 1) / d);
    const Ql frac = q - Ql(fl);
    if (frac < Ql(1, 2)) return fl;
    if (frac > Ql(1, 2)) return fl + 1;
    return fl % 2 == 0 ? fl : fl + 1;
}

}  // namespace rhythmprint
