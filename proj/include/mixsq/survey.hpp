#pragma once

// Range verification over the form catalogs.
//
// A range [lo, hi] is cut into fixed-size chunks that workers claim from a
// shared counter. Each chunk writes only its own result slot; slots are
// merged in index order, so reports do not depend on the number of workers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "theorem2.hpp"

namespace mixsq {

/// `control` marks the negative-control run; it is not a catalog source.
enum class catalog_source { theorem2, theorem1_i, theorem1_ii, theorem1_iii, panaitopol, control };

inline constexpr std::array<catalog_source, 5> all_sources{
    catalog_source::theorem2, catalog_source::theorem1_i, catalog_source::theorem1_ii,
    catalog_source::theorem1_iii, catalog_source::panaitopol,
};

constexpr std::string_view source_name(catalog_source s) {
    switch (s) {
    case catalog_source::theorem2: return "theorem2";
    case catalog_source::theorem1_i: return "theorem1_i";
    case catalog_source::theorem1_ii: return "theorem1_ii";
    case catalog_source::theorem1_iii: return "theorem1_iii";
    case catalog_source::panaitopol: return "panaitopol";
    case catalog_source::control: return "control";
    }
    return "?";
}

inline std::optional<catalog_source> parse_source(std::string_view name) {
    for (auto s : all_sources)
        if (source_name(s) == name)
            return s;
    return std::nullopt;
}

enum class verify_mode { constructive, oracle };

constexpr std::string_view mode_name(verify_mode m) {
    return m == verify_mode::constructive ? "constructive" : "oracle";
}

inline std::optional<verify_mode> parse_mode(std::string_view name) {
    if (name == "constructive")
        return verify_mode::constructive;
    if (name == "oracle")
        return verify_mode::oracle;
    return std::nullopt;
}

/// Extra constraint on witnesses beyond evaluating to n.
enum class witness_rule {
    any,
    /// x, y in the two square slots satisfy x != y (mod 2) or x = y > 0.
    mixed_parity_or_equal_positive,
};

struct catalog_entry {
    catalog_entry(std::string name, form_spec spec, catalog_source source,
                  domain_filter filter = domain_filter::all, witness_rule rule = witness_rule::any,
                  std::optional<mixed_form> constructive = std::nullopt)
        : name(std::move(name)), spec(spec), source(source), filter(filter), rule(rule),
          constructive(constructive) {}

    std::string name;
    form_spec spec;
    catalog_source source;
    domain_filter filter;
    witness_rule rule;
    std::optional<mixed_form> constructive; ///< set for the five constructive forms
};

namespace detail {

inline bool witness_ok(witness_rule rule, const signed_triple& w) {
    if (rule == witness_rule::any)
        return true;
    return mod(w.x, 2) != mod(w.y, 2) || (w.x == w.y && w.x > 0);
}

} // namespace detail

inline bool entry_represents(const catalog_entry& e, natural n) {
    if (e.rule == witness_rule::any)
        return exists(e.spec, n);
    return exists_where(e.spec, n, [&](const signed_triple& w) { return detail::witness_ok(e.rule, w); });
}

/// Every form the tool knows how to check, in a fixed order.
inline std::vector<catalog_entry> catalog() {
    std::vector<catalog_entry> out;
    for (auto f : all_mixed_forms)
        out.emplace_back(std::string(form_name(f)), spec_of(f), catalog_source::theorem2,
                         domain_filter::all, witness_rule::any, f);

    // An even square plus two triangular numbers, and t_z + x^2 + y^2 with
    // the parity side condition (positive n only).
    {
        auto even = square_two_tri_form(4, 1, 1);
        out.emplace_back(even.to_string(), even, catalog_source::theorem1_i);
        auto parity = two_squares_tri_form(1, 1, 1);
        out.emplace_back(parity.to_string() + ":parity", parity, catalog_source::theorem1_i,
                         domain_filter::positive, witness_rule::mixed_parity_or_equal_positive);
    }

    // a x^2 + b y^2 + c t_z
    constexpr natural ii[10][3] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 4},
                                   {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 8, 1}, {2, 2, 1}};
    for (const auto& v : ii) {
        auto s = two_squares_tri_form(v[0], v[1], v[2]);
        out.emplace_back(s.to_string(), s, catalog_source::theorem1_ii);
    }

    // a x^2 + b t_y + c t_z
    constexpr natural iii[15][3] = {{1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 1},
                                    {1, 4, 2}, {1, 5, 2}, {1, 6, 1}, {1, 8, 1}, {2, 1, 1},
                                    {2, 2, 1}, {2, 4, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1}};
    for (const auto& v : iii) {
        auto s = square_two_tri_form(v[0], v[1], v[2]);
        out.emplace_back(s.to_string(), s, catalog_source::theorem1_iii);
    }

    // a x^2 + b y^2 + c z^2 over positive odd n
    constexpr natural odd[3][3] = {{1, 1, 2}, {1, 2, 3}, {1, 2, 4}};
    for (const auto& v : odd) {
        auto s = squares_form(v[0], v[1], v[2]);
        out.emplace_back(s.to_string(), s, catalog_source::panaitopol, domain_filter::positive_odd);
    }
    return out;
}

struct range_report {
    std::string entry;
    catalog_source source = catalog_source::theorem2;
    verify_mode mode = verify_mode::oracle;
    natural lo = 0;
    natural hi = 0;
    natural verified = 0;
    std::vector<natural> counterexamples;
    std::chrono::milliseconds wall_time{0};

    /// Constructive theorem2 runs certify each n; everything else is a finite
    /// empirical check.
    std::string_view status() const {
        return mode == verify_mode::constructive ? "certified" : "empirical";
    }

    bool clean() const { return counterexamples.empty(); }
};

struct survey_options {
    unsigned jobs = 1;
    natural chunk_size = natural{1} << 14;
};

namespace detail {

struct chunk_result {
    natural verified = 0;
    std::vector<natural> counterexamples;
    std::exception_ptr error;
};

/// Applies check(n) to each admitted n in [lo, hi]; merge is in index order.
template <class Check>
range_report scan_range(natural lo, natural hi, domain_filter filter, const survey_options& opt,
                        Check&& check) {
    if (lo > hi)
        throw domain_error("range: lo > hi");
    if (opt.chunk_size == 0)
        throw domain_error("range: chunk size must be positive");

    const auto start = std::chrono::steady_clock::now();
    const natural span = hi - lo; // chunk count is span / size + 1
    const natural chunks = span / opt.chunk_size + 1;
    std::vector<chunk_result> results(chunks);
    std::atomic<natural> next{0};

    const auto worker = [&] {
        for (natural c; (c = next.fetch_add(1)) < chunks;) {
            auto& out = results[c];
            const natural first = lo + c * opt.chunk_size;
            const natural last = (hi - first < opt.chunk_size) ? hi : first + opt.chunk_size - 1;
            try {
                for (natural n = first;; ++n) {
                    if (admits(filter, n)) {
                        if (check(n))
                            ++out.verified;
                        else
                            out.counterexamples.push_back(n);
                    }
                    if (n == last)
                        break;
                }
            } catch (...) {
                out.error = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || chunks == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < std::min<natural>(jobs, chunks); ++i)
            pool.emplace_back(worker);
    }

    range_report report;
    report.lo = lo;
    report.hi = hi;
    for (auto& r : results) {
        if (r.error)
            std::rethrow_exception(r.error);
        report.verified += r.verified;
        report.counterexamples.insert(report.counterexamples.end(), r.counterexamples.begin(),
                                      r.counterexamples.end());
    }
    report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace detail

/// One report for a single catalog entry. Constructive mode is only
/// available for the theorem2 entries.
inline range_report verify_entry(const catalog_entry& e, natural lo, natural hi, verify_mode mode,
                                 const survey_options& opt = {}) {
    range_report r;
    if (mode == verify_mode::constructive) {
        if (!e.constructive)
            throw domain_error("no constructive decomposer for " + e.name);
        check_input(hi);
        const mixed_form f = *e.constructive;
        r = detail::scan_range(lo, hi, e.filter, opt, [f](natural n) {
            try {
                return verify(represent(f, n));
            } catch (const construction_error&) {
                return false;
            }
        });
    } else {
        check_input(hi);
        r = detail::scan_range(lo, hi, e.filter, opt, [&e](natural n) { return entry_represents(e, n); });
    }
    r.entry = e.name;
    r.source = e.source;
    r.mode = mode;
    return r;
}

/// One report per constructive form, optionally restricted to `forms`.
inline std::vector<range_report> verify_theorem2_range(natural lo, natural hi, verify_mode mode,
                                                       const survey_options& opt = {},
                                                       const std::vector<mixed_form>& forms = {}) {
    std::vector<range_report> out;
    for (const auto& e : catalog()) {
        if (e.source != catalog_source::theorem2)
            continue;
        if (!forms.empty() && std::find(forms.begin(), forms.end(), *e.constructive) == forms.end())
            continue;
        out.push_back(verify_entry(e, lo, hi, mode, opt));
    }
    return out;
}

/// Oracle-mode reports for every catalog entry matching `source`.
inline std::vector<range_report> verify_catalog(std::optional<catalog_source> source, natural lo,
                                                natural hi, const survey_options& opt = {}) {
    std::vector<range_report> out;
    for (const auto& e : catalog())
        if (!source || e.source == *source)
            out.push_back(verify_entry(e, lo, hi, verify_mode::oracle, opt));
    return out;
}

/// Oracle run of x^2+y^2+z^2, whose counterexamples must be exactly the
/// numbers 4^k(8l+7). A pipeline that finds nothing here is broken.
inline range_report negative_control(natural lo, natural hi, const survey_options& opt = {}) {
    const auto spec = squares_form(1, 1, 1);
    const catalog_entry e{spec.to_string(), spec, catalog_source::control};
    check_input(hi);
    auto r = detail::scan_range(lo, hi, e.filter, opt, [&](natural n) { return exists(spec, n); });
    r.entry = e.name;
    r.source = e.source;
    r.mode = verify_mode::oracle;
    return r;
}

/// True iff the control run flagged exactly the non-three-square numbers.
inline bool negative_control_matches(const range_report& r) {
    std::vector<natural> expected;
    for (natural n = r.lo;; ++n) {
        if (!is_three_square_feasible(n))
            expected.push_back(n);
        if (n == r.hi)
            break;
    }
    return expected == r.counterexamples;
}

} // namespace mixsq
