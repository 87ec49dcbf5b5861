#pragma once

#include <optional>
#include <string>

#include "arith.hpp"

namespace mixsq {

struct two_square_rep {
    natural a; ///< a >= b
    natural b;

    friend bool operator==(const two_square_rep&, const two_square_rep&) = default;
};

/// Canonical three-square representation: x >= y >= z >= 0, x^2+y^2+z^2 = m.
struct three_square_rep {
    natural m;
    natural x;
    natural y;
    natural z;

    friend bool operator==(const three_square_rep&, const three_square_rep&) = default;
};

/// a^2 + b^2 = m with a >= b, choosing the largest possible a.
inline std::optional<two_square_rep> two_squares(natural m) {
    if (m == 0)
        return two_square_rep{0, 0};
    // Odd part congruent to 3 mod 4 means some prime 3 mod 4 has odd exponent.
    natural odd = m;
    while (odd % 2 == 0)
        odd /= 2;
    if (odd % 4 == 3)
        return std::nullopt;

    for (natural a = isqrt(m);; --a) {
        const natural rest = m - a * a;
        if (rest > a * a)
            break;
        if (is_square(rest))
            return two_square_rep{a, isqrt(rest)};
        if (a == 0)
            break;
    }
    return std::nullopt;
}

/// Deterministic three-square decomposition. Scans the largest component
/// downward from isqrt(m); the first hit is the lexicographically greatest
/// sorted triple, so the remaining pair never exceeds it.
inline three_square_rep three_squares(natural m) {
    if (!is_three_square_feasible(m))
        throw not_representable(std::to_string(m) + " is of the form 4^k(8l+7)");
    for (natural x = isqrt(m);; --x) {
        if (auto pair = two_squares(m - x * x); pair && pair->a <= x)
            return {m, x, pair->a, pair->b};
        if (x == 0)
            break;
    }
    throw construction_error("three_squares: search exhausted for feasible " + std::to_string(m));
}

} // namespace mixsq
