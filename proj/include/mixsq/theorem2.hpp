#pragma once

// Constructive representations of every natural number by the five mixed
// forms
//
//     x^2 + 3y^2 + t_z      x^2 + 3t_y + t_z      x^2 + 6t_y + t_z
//     3x^2 + 2t_y + t_z     4x^2 + 2t_y + t_z
//
// Each decomposer lifts n to a number that is a sum of three squares, takes
// the canonical decomposition, normalizes signs and order, and reads off the
// witness by exact division. Every congruence the construction relies on is
// checked at runtime; a failed check throws construction_error.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "jacobi.hpp"
#include "three_squares.hpp"

namespace mixsq {

enum class mixed_form {
    x2_3y2_t,      ///< x^2 + 3y^2 + t_z
    x2_3t_t,       ///< x^2 + 3t_y + t_z
    x2_6t_t,       ///< x^2 + 6t_y + t_z
    three_x2_2t_t, ///< 3x^2 + 2t_y + t_z
    four_x2_2t_t,  ///< 4x^2 + 2t_y + t_z
};

inline constexpr std::array<mixed_form, 5> all_mixed_forms{
    mixed_form::x2_3y2_t, mixed_form::x2_3t_t,       mixed_form::x2_6t_t,
    mixed_form::three_x2_2t_t, mixed_form::four_x2_2t_t,
};

constexpr std::string_view form_name(mixed_form f) {
    switch (f) {
    case mixed_form::x2_3y2_t: return "x2+3y2+t";
    case mixed_form::x2_3t_t: return "x2+3t+t";
    case mixed_form::x2_6t_t: return "x2+6t+t";
    case mixed_form::three_x2_2t_t: return "3x2+2t+t";
    case mixed_form::four_x2_2t_t: return "4x2+2t+t";
    }
    return "?";
}

inline std::optional<mixed_form> parse_form_name(std::string_view name) {
    for (auto f : all_mixed_forms)
        if (form_name(f) == name)
            return f;
    return std::nullopt;
}

/// Witness that n = form(x, y, z). Triangular slots may hold negative indices.
struct certificate {
    mixed_form form = mixed_form::x2_3y2_t;
    natural n = 0;
    integer x = 0;
    integer y = 0;
    integer z = 0;

    friend bool operator==(const certificate&, const certificate&) = default;
};

/// Exact value of the form at (x, y, z); throws width_error past 64 bits.
inline natural evaluate(mixed_form form, integer x, integer y, integer z) {
    using wide = unsigned __int128;
    const auto sq = [](integer v) {
        const wide a = v < 0 ? wide(-(v + 1)) + 1 : wide(v);
        return a * a;
    };
    const auto tri = [](integer v) { return wide(triangular(v)); };
    wide total = 0;
    switch (form) {
    case mixed_form::x2_3y2_t: total = sq(x) + 3 * sq(y) + tri(z); break;
    case mixed_form::x2_3t_t: total = sq(x) + 3 * tri(y) + tri(z); break;
    case mixed_form::x2_6t_t: total = sq(x) + 6 * tri(y) + tri(z); break;
    case mixed_form::three_x2_2t_t: total = 3 * sq(x) + 2 * tri(y) + tri(z); break;
    case mixed_form::four_x2_2t_t: total = 4 * sq(x) + 2 * tri(y) + tri(z); break;
    }
    if (total > wide(~natural{0}))
        throw width_error("form value overflows 64 bits");
    return static_cast<natural>(total);
}

inline bool verify(const certificate& c) {
    return evaluate(c.form, c.x, c.y, c.z) == c.n;
}

/// One congruence asserted by a construction: value = expected (mod modulus).
struct congruence_check {
    std::string label;
    integer value;
    integer modulus;
    integer expected;
    bool held;
};

/// Optional record of what a decomposer did, for audit and tests.
struct proof_trace {
    natural lifted = 0;             ///< the number decomposed into three squares
    three_square_rep squares{};     ///< its canonical decomposition
    signed_triple arranged{};       ///< after sign normalization and relabeling
    std::vector<congruence_check> checks;

    bool all_held() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.held; });
    }
};

namespace detail {

class step_checker {
public:
    explicit step_checker(proof_trace* trace) : trace_(trace) {}

    void expect(std::string label, integer value, integer modulus, integer expected) {
        const bool held = mod(value, modulus) == expected;
        if (trace_)
            trace_->checks.push_back({label, value, modulus, expected, held});
        if (!held)
            throw construction_error(label + ": " + std::to_string(value) + " mod " +
                                     std::to_string(modulus) + " != " + std::to_string(expected));
    }

    integer exact_div(std::string label, integer numerator, integer denominator) {
        expect(std::move(label), numerator, denominator, 0);
        return numerator / denominator;
    }

private:
    proof_trace* trace_;
};

inline std::array<integer, 3> lift(natural target, proof_trace* trace) {
    const auto rep = three_squares(target);
    if (trace) {
        trace->lifted = target;
        trace->squares = rep;
    }
    return {integer(rep.x), integer(rep.y), integer(rep.z)};
}

inline void record(proof_trace* trace, integer x, integer y, integer z) {
    if (trace)
        trace->arranged = {x, y, z};
}

inline certificate finish(certificate c) {
    if (!verify(c))
        throw construction_error("constructed witness does not evaluate to n");
    return c;
}

} // namespace detail

/// n = 4x^2 + 2t_y + t_z via 8n+3 = x^2+y^2+z^2.
inline certificate rep_4x2_2t_t(natural n, proof_trace* trace = nullptr) {
    check_input(n);
    detail::step_checker check(trace);
    auto c = detail::lift(8 * n + 3, trace);

    // 8n+3 = 3 (mod 8) forces all three components odd; make each 1 mod 4.
    for (auto& v : c) {
        if (mod(v, 4) == 3)
            v = -v;
        check.expect("component = 1 (mod 4)", v, 4, 1);
    }

    // Two of the three share a residue mod 8. If all three do, take the two
    // smallest.
    integer x, y, z;
    const auto r = [&](int i) { return mod(c[i], 8); };
    if (r(0) == r(1) && r(1) == r(2)) {
        std::sort(c.begin(), c.end());
        x = c[0], y = c[1], z = c[2];
    } else if (r(0) == r(1)) {
        x = c[0], y = c[1], z = c[2];
    } else if (r(0) == r(2)) {
        x = c[0], y = c[2], z = c[1];
    } else {
        x = c[1], y = c[2], z = c[0];
    }
    detail::record(trace, x, y, z);
    check.expect("x - y = 0 (mod 8)", x - y, 8, 0);

    const integer x0 = check.exact_div("(x-y)/8", x - y, 8);
    const integer y0 = check.exact_div("(x+y-2)/4", x + y - 2, 4);
    const integer z0 = check.exact_div("(z-1)/2", z - 1, 2);
    return detail::finish({mixed_form::four_x2_2t_t, n, x0, y0, z0});
}

/// n = x^2 + 3t_y + t_z via 12(4n+2) = x^2+y^2+z^2 and Jacobi's identity.
inline certificate rep_x2_3t_t(natural n, proof_trace* trace = nullptr) {
    check_input(n);
    detail::step_checker check(trace);
    const auto raw = detail::lift(12 * (4 * n + 2), trace);
    const auto aligned = align_mod3({raw[0], raw[1], raw[2]});
    const std::array<integer, 3> c{aligned.x, aligned.y, aligned.z};

    // 48n+24 = 8 (mod 16): all components even, exactly one divisible by 4.
    int quad = -1;
    for (int i = 0; i < 3; ++i) {
        check.expect("component even", c[i], 2, 0);
        if (mod(c[i], 4) == 0) {
            if (quad >= 0)
                throw construction_error("more than one component divisible by 4");
            quad = i;
        }
    }
    if (quad < 0)
        throw construction_error("no component divisible by 4");

    const integer x = c[quad];
    const integer y = c[quad == 0 ? 1 : 0];
    const integer z = c[quad == 2 ? 1 : 2];
    detail::record(trace, x, y, z);
    check.expect("x = y = z (mod 3)", x - y, 3, 0);
    check.expect("x = y = z (mod 3)", y - z, 3, 0);
    check.expect("x+y+z = 0 (mod 12)", x + y + z, 12, 0);
    check.expect("x+y-2z = 6 (mod 12)", x + y - 2 * z, 12, 6);
    check.expect("x-y = 6 (mod 12)", x - y, 12, 6);

    const integer x0 = check.exact_div("(x+y+z)/12", x + y + z, 12);
    const integer y0 = check.exact_div("(x+y-2z-6)/12", x + y - 2 * z - 6, 12);
    const integer z0 = check.exact_div("(x-y-6)/12", x - y - 6, 12);
    // The identity yields n = x0^2 + t_{y0} + 3t_{z0}; the form's slot order
    // puts the 3t term second.
    return detail::finish({mixed_form::x2_3t_t, n, x0, z0, y0});
}

/// The three-way construction from 24n+3+6eps = x^2+y^2+z^2, eps in {0,1,3}:
///   eps = 0 -> x^2 + 3y^2 + t_z
///   eps = 1 -> 3x^2 + 2t_y + t_z
///   eps = 3 -> x^2 + 6t_y + t_z
inline certificate rep_eps(natural n, int eps, proof_trace* trace = nullptr) {
    if (eps != 0 && eps != 1 && eps != 3)
        throw domain_error("rep_eps: eps must be 0, 1 or 3");
    check_input(n);
    detail::step_checker check(trace);
    const auto raw = detail::lift(24 * n + 3 + 6 * natural(eps), trace);
    const auto aligned = align_mod3({raw[0], raw[1], raw[2]});
    const std::array<integer, 3> c{aligned.x, aligned.y, aligned.z};
    const auto odd = [&](int i) { return mod(c[i], 2) == 1; };

    integer x, y, z;
    if (eps == 0) {
        // 3 (mod 8): all odd, and two of them agree mod 4.
        for (int i = 0; i < 3; ++i)
            check.expect("component odd", c[i], 2, 1);
        const auto r = [&](int i) { return mod(c[i], 4); };
        if (r(0) == r(1))
            x = c[0], y = c[1], z = c[2];
        else if (r(0) == r(2))
            x = c[0], y = c[2], z = c[1];
        else
            x = c[1], y = c[2], z = c[0];
        check.expect("x = y (mod 4)", x - y, 4, 0);
    } else if (eps == 1) {
        // 1 (mod 8): one odd component, which goes last.
        const int count = odd(0) + odd(1) + odd(2);
        if (count != 1)
            throw construction_error("expected exactly one odd component");
        const int o = odd(0) ? 0 : odd(1) ? 1 : 2;
        x = c[o == 0 ? 1 : 0];
        y = c[o == 2 ? 1 : 2];
        z = c[o];
        check.expect("x even", x, 2, 0);
        check.expect("y even", y, 2, 0);
        check.expect("x = y (mod 4)", x - y, 4, 0);
    } else {
        // 5 (mod 8): one odd, one 2 mod 4, one 0 mod 4.
        int two = -1, zero = -1, one = -1;
        for (int i = 0; i < 3; ++i) {
            const integer r = mod(c[i], 4);
            int& slot = (r % 2 == 1) ? one : (r == 2 ? two : zero);
            if (slot >= 0)
                throw construction_error("unexpected residue pattern mod 4");
            slot = i;
        }
        x = c[two], y = c[zero], z = c[one];
        check.expect("x = 2 (mod 4)", x, 4, 2);
        check.expect("y = 0 (mod 4)", y, 4, 0);
        check.expect("z odd", z, 2, 1);
    }
    detail::record(trace, x, y, z);
    check.expect("x = y = z (mod 3)", x - y, 3, 0);
    check.expect("x = y = z (mod 3)", y - z, 3, 0);
    check.expect("x+y+z = 3 (mod 6)", x + y + z, 6, 3);
    check.expect("x+y-2z (mod 12)", x + y - 2 * z, 12, eps == 1 ? 6 : 0);
    check.expect("x-y (mod 12)", x - y, 12, eps == 3 ? 6 : 0);

    const integer z0 = check.exact_div("(x+y+z-3)/6", x + y + z - 3, 6);
    switch (eps) {
    case 0: {
        const integer x0 = check.exact_div("(x+y-2z)/12", x + y - 2 * z, 12);
        const integer y0 = check.exact_div("(x-y)/12", x - y, 12);
        return detail::finish({mixed_form::x2_3y2_t, n, x0, y0, z0});
    }
    case 1: {
        const integer x0 = check.exact_div("(x-y)/12", x - y, 12);
        const integer y0 = check.exact_div("(x+y-2z-6)/12", x + y - 2 * z - 6, 12);
        return detail::finish({mixed_form::three_x2_2t_t, n, x0, y0, z0});
    }
    default: {
        const integer x0 = check.exact_div("(x+y-2z)/12", x + y - 2 * z, 12);
        const integer y0 = check.exact_div("(x-y-6)/12", x - y - 6, 12);
        return detail::finish({mixed_form::x2_6t_t, n, x0, y0, z0});
    }
    }
}

/// Certificate for n under any of the five forms. Every n up to the input
/// ceiling is representable; the only error is width_error.
inline certificate represent(mixed_form form, natural n, proof_trace* trace = nullptr) {
    switch (form) {
    case mixed_form::x2_3y2_t: return rep_eps(n, 0, trace);
    case mixed_form::x2_3t_t: return rep_x2_3t_t(n, trace);
    case mixed_form::x2_6t_t: return rep_eps(n, 3, trace);
    case mixed_form::three_x2_2t_t: return rep_eps(n, 1, trace);
    case mixed_form::four_x2_2t_t: return rep_4x2_2t_t(n, trace);
    }
    throw domain_error("unknown form");
}

} // namespace mixsq
