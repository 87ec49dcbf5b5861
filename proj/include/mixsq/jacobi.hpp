#pragma once

#include <cstdlib>

#include "arith.hpp"

namespace mixsq {

struct signed_triple {
    integer x = 0;
    integer y = 0;
    integer z = 0;

    friend bool operator==(const signed_triple&, const signed_triple&) = default;
};

/// Image of (x, y, z) under Jacobi's identity:
///   3(x^2+y^2+z^2) = s^2 + 2u^2 + 6v^2,
///   s = x+y+z,  u = (x+y-2z)/2,  v = (x-y)/2.
struct jacobi_image {
    integer s = 0;
    integer u = 0;
    integer v = 0;

    friend bool operator==(const jacobi_image&, const jacobi_image&) = default;
};

/// Requires x = y (mod 2).
inline jacobi_image jacobi_transform(const signed_triple& t) {
    if (mod(t.x, 2) != mod(t.y, 2))
        throw precondition_error("jacobi_transform: x and y must have equal parity");
    return {t.x + t.y + t.z, (t.x + t.y - 2 * t.z) / 2, (t.x - t.y) / 2};
}

/// Flip signs so every component has the same residue mod 3 (all 0 or all 1).
/// Multiples of 3 become nonnegative; other components take residue 1.
/// Requires x^2+y^2+z^2 = 0 (mod 3).
inline signed_triple align_mod3(const signed_triple& t) {
    // Squares are 0 or 1 mod 3, so the requirement means 0 or 3 nonzero residues.
    const auto nonzero = [](integer c) { return mod(c, 3) != 0; };
    const int count = nonzero(t.x) + nonzero(t.y) + nonzero(t.z);
    if (count != 0 && count != 3)
        throw domain_error("align_mod3: sum of squares is not divisible by 3");
    const auto flip = [](integer c) -> integer {
        switch (mod(c, 3)) {
        case 0: return c < 0 ? -c : c;
        case 1: return c;
        default: return -c;
        }
    };
    return {flip(t.x), flip(t.y), flip(t.z)};
}

} // namespace mixsq
