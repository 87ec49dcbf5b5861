#pragma once

// Text formats: the form-spec grammar, certificate JSON/CSV, and report
// JSON/CSV/human output. JSON and CSV are byte-stable: fixed field order,
// decimal integers, no whitespace in JSON.

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "survey.hpp"
#include "theorem2.hpp"

namespace mixsq {

enum class output_format { human, json, csv };

/// Parses "<coeff>*sq|tri+<coeff>*sq|tri+<coeff>*sq|tri", e.g. "1*sq+3*sq+1*tri".
inline form_spec parse_form_spec(std::string_view text) {
    std::size_t pos = 0;
    const auto parse_term = [&]() -> term {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("expected coefficient", start);
        natural coeff = 0;
        const auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, coeff);
        if (ec != std::errc{} || coeff > max_input)
            throw parse_error("coefficient out of range", start);
        if (coeff == 0)
            throw parse_error("coefficient must be positive", start);
        if (pos >= text.size() || text[pos] != '*')
            throw parse_error("expected '*'", pos);
        ++pos;
        const auto rest = text.substr(pos);
        if (rest.starts_with("sq")) {
            pos += 2;
            return {coeff, term_kind::square};
        }
        if (rest.starts_with("tri")) {
            pos += 3;
            return {coeff, term_kind::triangular};
        }
        throw parse_error("expected 'sq' or 'tri'", pos);
    };

    std::array<term, 3> terms;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i > 0) {
            if (pos >= text.size() || text[pos] != '+')
                throw parse_error("expected '+'", pos);
            ++pos;
        }
        terms[i] = parse_term();
    }
    if (pos != text.size())
        throw parse_error("unexpected trailing input", pos);
    return {terms[0], terms[1], terms[2]};
}

// -- certificates ------------------------------------------------------------

inline nlohmann::ordered_json to_json(const certificate& c) {
    nlohmann::ordered_json j;
    j["form"] = std::string(form_name(c.form));
    j["n"] = c.n;
    j["x"] = c.x;
    j["y"] = c.y;
    j["z"] = c.z;
    return j;
}

inline std::string certificate_json(const certificate& c) { return to_json(c).dump(); }

/// Inverse of certificate_json. Throws parse_error on malformed input.
inline certificate parse_certificate_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw parse_error("certificate is not a JSON object", 0);
    const auto field = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw parse_error(std::string("missing field '") + key + "'", 0);
        return j.at(key);
    };
    const auto& name = field("form");
    if (!name.is_string())
        throw parse_error("field 'form' must be a string", 0);
    const auto form = parse_form_name(name.get<std::string>());
    if (!form)
        throw parse_error("unknown form '" + name.get<std::string>() + "'", 0);
    const auto& n = field("n");
    if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<integer>() >= 0))
        throw parse_error("field 'n' must be a nonnegative integer", 0);
    const auto signed_field = [&](const char* key) {
        const auto& v = field(key);
        if (!v.is_number_integer())
            throw parse_error(std::string("field '") + key + "' must be an integer", 0);
        return v.get<integer>();
    };
    return {*form, n.get<natural>(), signed_field("x"), signed_field("y"), signed_field("z")};
}

inline std::string certificate_csv(const std::vector<certificate>& certs) {
    std::string out = "form,n,x,y,z\n";
    for (const auto& c : certs)
        out += std::string(form_name(c.form)) + ',' + std::to_string(c.n) + ',' + std::to_string(c.x) +
               ',' + std::to_string(c.y) + ',' + std::to_string(c.z) + '\n';
    return out;
}

/// e.g. "2 = 4*(0)^2 + 2*t(-2) + t(0)"
inline std::string certificate_human(const certificate& c) {
    const auto sq = [](natural k, integer v) {
        return (k == 1 ? std::string() : std::to_string(k) + "*") + "(" + std::to_string(v) + ")^2";
    };
    const auto tri = [](natural k, integer v) {
        return (k == 1 ? std::string() : std::to_string(k) + "*") + "t(" + std::to_string(v) + ")";
    };
    const auto spec = spec_of(c.form);
    const std::array<integer, 3> v{c.x, c.y, c.z};
    std::string out = std::to_string(c.n) + " =";
    for (std::size_t i = 0; i < 3; ++i) {
        out += i ? " + " : " ";
        out += spec[i].kind == term_kind::square ? sq(spec[i].coeff, v[i]) : tri(spec[i].coeff, v[i]);
    }
    return out + "   [" + std::string(form_name(c.form)) + "]";
}

// -- range reports -------------------------------------------------------------

/// Serialization knobs. Timing is the one nondeterministic field; with
/// timing off wall_ms is written as 0 and output is byte-reproducible.
struct report_style {
    bool timing = true;
};

inline nlohmann::ordered_json to_json(const range_report& r, report_style style = {}) {
    nlohmann::ordered_json j;
    j["entry"] = r.entry;
    j["source"] = std::string(source_name(r.source));
    j["mode"] = std::string(mode_name(r.mode));
    j["status"] = std::string(r.status());
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["verified"] = r.verified;
    j["counterexamples"] = r.counterexamples;
    j["wall_ms"] = style.timing ? r.wall_time.count() : 0;
    return j;
}

inline std::string reports_json(const std::vector<range_report>& reports, report_style style = {}) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r, style));
    return arr.dump() + "\n";
}

inline std::string reports_csv(const std::vector<range_report>& reports, report_style style = {}) {
    std::string out = "entry,lo,hi,verified,counterexamples,mode,wall_ms\n";
    for (const auto& r : reports) {
        std::string ce;
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
            if (i)
                ce += ';';
            ce += std::to_string(r.counterexamples[i]);
        }
        out += r.entry + ',' + std::to_string(r.lo) + ',' + std::to_string(r.hi) + ',' +
               std::to_string(r.verified) + ',' + ce + ',' + std::string(mode_name(r.mode)) + ',' +
               std::to_string(style.timing ? r.wall_time.count() : 0) + '\n';
    }
    return out;
}

inline std::string reports_human(const std::vector<range_report>& reports, report_style style = {}) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.clean() ? "ok   " : "FAIL ") << r.entry << " [" << source_name(r.source) << ", "
            << mode_name(r.mode) << ", " << r.status() << "] n in [" << r.lo << ", " << r.hi
            << "]: " << r.verified << " verified";
        if (!r.clean())
            out << ", " << r.counterexamples.size() << " counterexamples, smallest "
                << r.counterexamples.front();
        if (style.timing)
            out << " (" << r.wall_time.count() << " ms)";
        out << '\n';
    }
    return out.str();
}

inline std::string render(const std::vector<range_report>& reports, output_format fmt,
                          report_style style = {}) {
    switch (fmt) {
    case output_format::json: return reports_json(reports, style);
    case output_format::csv: return reports_csv(reports, style);
    case output_format::human: break;
    }
    return reports_human(reports, style);
}

} // namespace mixsq
