#pragma once

// Brute-force engine for arbitrary three-term forms
//     c1*T1(x) + c2*T2(y) + c3*T3(z),   T in {square, triangular}.
// Independent of the constructive path in theorem2.hpp: it never calls the
// three-square decomposer, only direct enumeration.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "jacobi.hpp"
#include "theorem2.hpp"

namespace mixsq {

enum class term_kind { square, triangular };

struct term {
    natural coeff = 1;
    term_kind kind = term_kind::square;

    friend bool operator==(const term&, const term&) = default;
};

class form_spec {
public:
    form_spec(term a, term b, term c) : terms_{a, b, c} {
        for (const auto& t : terms_)
            if (t.coeff == 0)
                throw domain_error("form_spec: coefficients must be positive");
    }

    const std::array<term, 3>& terms() const { return terms_; }
    const term& operator[](std::size_t i) const { return terms_[i]; }

    /// Canonical text, e.g. "1*sq+3*sq+1*tri".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i)
                out += '+';
            out += std::to_string(terms_[i].coeff);
            out += terms_[i].kind == term_kind::square ? "*sq" : "*tri";
        }
        return out;
    }

    friend bool operator==(const form_spec&, const form_spec&) = default;

private:
    std::array<term, 3> terms_;
};

inline form_spec squares_form(natural a, natural b, natural c) {
    return {{a, term_kind::square}, {b, term_kind::square}, {c, term_kind::square}};
}

/// a*x^2 + b*y^2 + c*t_z
inline form_spec two_squares_tri_form(natural a, natural b, natural c) {
    return {{a, term_kind::square}, {b, term_kind::square}, {c, term_kind::triangular}};
}

/// a*x^2 + b*t_y + c*t_z
inline form_spec square_two_tri_form(natural a, natural b, natural c) {
    return {{a, term_kind::square}, {b, term_kind::triangular}, {c, term_kind::triangular}};
}

/// The brute-force spec equivalent to a constructive form (same slot order).
inline form_spec spec_of(mixed_form f) {
    switch (f) {
    case mixed_form::x2_3y2_t: return two_squares_tri_form(1, 3, 1);
    case mixed_form::x2_3t_t: return square_two_tri_form(1, 3, 1);
    case mixed_form::x2_6t_t: return square_two_tri_form(1, 6, 1);
    case mixed_form::three_x2_2t_t: return square_two_tri_form(3, 2, 1);
    case mixed_form::four_x2_2t_t: return square_two_tri_form(4, 2, 1);
    }
    throw domain_error("unknown form");
}

/// Which n in a range are candidates.
enum class domain_filter { all, positive, positive_odd };

constexpr bool admits(domain_filter f, natural n) {
    switch (f) {
    case domain_filter::all: return true;
    case domain_filter::positive: return n > 0;
    case domain_filter::positive_odd: return n % 2 == 1;
    }
    return false;
}

struct witness_list {
    natural n = 0;
    std::vector<signed_triple> witnesses;
};

namespace detail {

/// Value of c * T(k) for a nonnegative representative index k, or nullopt
/// once it cannot fit.
inline std::optional<natural> term_value(const term& t, natural k) {
    const natural base = t.kind == term_kind::square ? k * k : k * (k + 1) / 2;
    natural out = 0;
    if (__builtin_mul_overflow(t.coeff, base, &out))
        return std::nullopt;
    return out;
}

/// Nonnegative representative k with c * T(k) = value, if any.
inline std::optional<natural> solve_term(const term& t, natural value) {
    if (value % t.coeff != 0)
        return std::nullopt;
    const natural v = value / t.coeff;
    if (t.kind == term_kind::square) {
        if (!is_square(v))
            return std::nullopt;
        return isqrt(v);
    }
    if (!is_triangular(v))
        return std::nullopt;
    return (isqrt(8 * v + 1) - 1) / 2;
}

/// Calls visit(reps) for every nonnegative-representative solution; reps are
/// in slot order. Stops early when visit returns false. Returns false iff
/// stopped early.
///
/// Square slot k stands for {k, -k}; triangular slot k stands for {k, -k-1}.
/// The largest coefficient is iterated outermost and the smallest is solved
/// directly.
template <class Visit>
bool for_each_solution(const form_spec& spec, natural n, Visit&& visit) {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return spec[a].coeff > spec[b].coeff; });
    const term& outer = spec[order[0]];
    const term& middle = spec[order[1]];
    const term& solved = spec[order[2]];

    std::array<natural, 3> reps{};
    for (natural i = 0;; ++i) {
        const auto vi = term_value(outer, i);
        if (!vi || *vi > n)
            break;
        for (natural j = 0;; ++j) {
            const auto vj = term_value(middle, j);
            if (!vj || *vi + *vj > n)
                break;
            if (const auto k = solve_term(solved, n - *vi - *vj)) {
                reps[order[0]] = i;
                reps[order[1]] = j;
                reps[order[2]] = *k;
                if (!visit(reps))
                    return false;
            }
        }
    }
    return true;
}

inline natural multiplicity(const term& t, natural rep) {
    return (t.kind == term_kind::square && rep == 0) ? 1 : 2;
}

/// Signed indices represented by a nonnegative representative.
inline std::vector<integer> expand(const term& t, natural rep) {
    const integer k = static_cast<integer>(rep);
    if (t.kind == term_kind::square)
        return k == 0 ? std::vector<integer>{0} : std::vector<integer>{-k, k};
    return {-k - 1, k};
}

template <class Visit>
bool for_each_signed(const form_spec& spec, const std::array<natural, 3>& reps, Visit&& visit) {
    for (integer x : expand(spec[0], reps[0]))
        for (integer y : expand(spec[1], reps[1]))
            for (integer z : expand(spec[2], reps[2]))
                if (!visit(signed_triple{x, y, z}))
                    return false;
    return true;
}

} // namespace detail

/// Exact value of spec at a signed triple; width_error past 64 bits.
inline natural evaluate(const form_spec& spec, const signed_triple& w) {
    using wide = unsigned __int128;
    const std::array<integer, 3> v{w.x, w.y, w.z};
    wide total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const integer s = v[i];
        wide base;
        if (spec[i].kind == term_kind::square) {
            const wide a = s < 0 ? wide(-(s + 1)) + 1 : wide(s);
            base = a * a;
        } else {
            base = triangular(s);
        }
        total += base * spec[i].coeff;
    }
    if (total > wide(~natural{0}))
        throw width_error("form value overflows 64 bits");
    return static_cast<natural>(total);
}

/// True iff some integer triple evaluates to n.
inline bool exists(const form_spec& spec, natural n) {
    return !detail::for_each_solution(spec, n, [](const auto&) { return false; });
}

/// Like exists, but the witness must also satisfy pred(signed_triple).
template <class Pred>
bool exists_where(const form_spec& spec, natural n, Pred&& pred) {
    return !detail::for_each_solution(spec, n, [&](const auto& reps) {
        return detail::for_each_signed(spec, reps, [&](const signed_triple& w) { return !pred(w); });
    });
}

/// Number of integer triples evaluating to n. Sign pairs of a square and the
/// index pair {k, -k-1} of a triangular count as distinct.
inline natural count(const form_spec& spec, natural n) {
    natural total = 0;
    detail::for_each_solution(spec, n, [&](const auto& reps) {
        total += detail::multiplicity(spec[0], reps[0]) * detail::multiplicity(spec[1], reps[1]) *
                 detail::multiplicity(spec[2], reps[2]);
        return true;
    });
    return total;
}

/// First `limit` witnesses of n in lexicographic (x, y, z) order.
inline witness_list witnesses(const form_spec& spec, natural n, natural limit) {
    if (limit == 0)
        throw domain_error("witnesses: limit must be at least 1");
    witness_list out{n, {}};
    detail::for_each_solution(spec, n, [&](const auto& reps) {
        return detail::for_each_signed(spec, reps, [&](const signed_triple& w) {
            out.witnesses.push_back(w);
            return true;
        });
    });
    std::sort(out.witnesses.begin(), out.witnesses.end(), [](const auto& a, const auto& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    if (out.witnesses.size() > limit)
        out.witnesses.resize(limit);
    return out;
}

/// Smallest admitted n in [lo, hi] that spec does not represent.
inline std::optional<natural> first_counterexample(const form_spec& spec, natural lo, natural hi,
                                                   domain_filter filter = domain_filter::all) {
    if (lo > hi)
        throw domain_error("first_counterexample: lo > hi");
    for (natural n = lo;; ++n) {
        if (admits(filter, n) && !exists(spec, n))
            return n;
        if (n == hi)
            break;
    }
    return std::nullopt;
}

} // namespace mixsq
