#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace mixsq {

using natural = std::uint64_t;
using integer = std::int64_t;

/// Largest n accepted by top-level representation requests. Keeps 72n+63
/// and every other construction intermediate inside a signed 64-bit word.
inline constexpr natural max_input = natural{1} << 55;

inline void check_input(natural n) {
    if (n > max_input)
        throw width_error("input " + std::to_string(n) + " exceeds ceiling 2^55");
}

/// t_i = i(i+1)/2. Defined for every integer i, and t_i = t_{-i-1}.
constexpr natural triangular(integer i) {
    // Map to the nonnegative representative first so the product is unsigned.
    const natural k = i >= 0 ? static_cast<natural>(i) : static_cast<natural>(-(i + 1));
    const natural a = (k % 2 == 0) ? k / 2 : k;
    const natural b = (k % 2 == 0) ? k + 1 : (k + 1) / 2;
    natural out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw width_error("triangular number overflows 64 bits");
    return out;
}

/// floor(sqrt(m)), exact for the full 64-bit range.
inline natural isqrt(natural m) {
    if (m == 0)
        return 0;
    natural r = static_cast<natural>(std::sqrt(static_cast<double>(m)));
    // The double seed is within a couple of units; walk it onto the floor.
    if (r > 0xFFFFFFFFull)
        r = 0xFFFFFFFFull;
    while (r * r > m)
        --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= m)
        ++r;
    return r;
}

inline bool is_square(natural m) {
    const natural r = isqrt(m);
    return r * r == m;
}

/// True iff v = t_i for some integer i, i.e. 8v+1 is a perfect square.
inline bool is_triangular(natural v) {
    if (v > (~natural{0} - 1) / 8)
        throw width_error("triangularity test overflows 64 bits");
    return is_square(8 * v + 1);
}

struct four_power_split {
    natural k;    ///< exponent of 4
    natural core; ///< m / 4^k, not divisible by 4

    friend bool operator==(const four_power_split&, const four_power_split&) = default;
};

/// m = 4^k * core with 4 not dividing core.
constexpr four_power_split strip_fours(natural m) {
    if (m == 0)
        throw domain_error("strip_fours: m must be positive");
    four_power_split s{0, m};
    while (s.core % 4 == 0) {
        s.core /= 4;
        ++s.k;
    }
    return s;
}

/// Gauss-Legendre: m is a sum of three squares iff m is not 4^k(8l+7).
constexpr bool is_three_square_feasible(natural m) {
    if (m == 0)
        return true;
    return strip_fours(m).core % 8 != 7;
}

/// Floor-style residue in [0, modulus) for possibly negative values.
constexpr integer mod(integer value, integer modulus) {
    const integer r = value % modulus;
    return r < 0 ? r + modulus : r;
}

} // namespace mixsq
