// mixsq: represent naturals by mixed square/triangular forms and verify
// form catalogs over ranges.
//
// Exit codes: 0 success, 1 counterexample or failed check, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mixsq/mixsq.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct format_flags {
    bool json = false;
    bool csv = false;
    bool human = false;
    std::string format;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--json", json, "JSON output");
        cmd->add_flag("--csv", csv, "CSV output");
        cmd->add_flag("--human", human, "human-readable output (default)");
        cmd->add_option("--format", format, "human|json|csv")
            ->check(CLI::IsMember({"human", "json", "csv"}));
    }

    mixsq::output_format resolve() const {
        if (int(json) + int(csv) + int(human) + int(!format.empty()) > 1)
            throw usage_error("choose at most one output format");
        if (json || format == "json")
            return mixsq::output_format::json;
        if (csv || format == "csv")
            return mixsq::output_format::csv;
        return mixsq::output_format::human;
    }
};

void check_bounds(mixsq::natural lo, mixsq::natural hi) {
    if (lo > hi)
        throw usage_error("lo must not exceed hi");
    if (hi > mixsq::max_input)
        throw usage_error("hi exceeds the input ceiling 2^55");
}

std::vector<mixsq::mixed_form> parse_forms(const std::vector<std::string>& names) {
    std::vector<mixsq::mixed_form> out;
    for (const auto& name : names) {
        const auto f = mixsq::parse_form_name(name);
        if (!f)
            throw usage_error("unknown form '" + name + "'");
        out.push_back(*f);
    }
    return out;
}

int emit_reports(const std::vector<mixsq::range_report>& reports, mixsq::output_format fmt,
                 bool timing) {
    std::cout << mixsq::render(reports, fmt, {timing});
    for (const auto& r : reports)
        if (!r.clean())
            return exit_counterexample;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed sums of squares and triangular numbers: certificates and range checks"};
    app.require_subcommand(1);

    std::string form_text;
    std::string spec_text;
    mixsq::natural n = 0;
    mixsq::natural lo = 0;
    mixsq::natural hi = 0;
    mixsq::natural limit = 20;
    unsigned jobs = 1;
    bool recheck = false;
    bool no_timing = false;
    std::string mode_text = "constructive";
    std::string source_text;
    std::vector<std::string> form_names;
    format_flags fmt;

    auto* represent = app.add_subcommand("represent", "certificate for n in one of the five forms");
    represent->add_option("form", form_text, "x2+3y2+t | x2+3t+t | x2+6t+t | 3x2+2t+t | 4x2+2t+t")
        ->required();
    represent->add_option("n", n, "natural number")->required();
    represent->add_flag("--verify", recheck, "re-check the certificate before printing");
    fmt.attach(represent);

    auto* range = app.add_subcommand("verify-range", "check every n in [lo, hi] for the five forms");
    range->add_option("lo", lo)->required();
    range->add_option("hi", hi)->required();
    range->add_option("--mode", mode_text, "constructive|oracle")
        ->check(CLI::IsMember({"constructive", "oracle"}));
    range->add_option("--forms", form_names, "restrict to these forms")->delimiter(',');
    range->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    range->add_flag("--no-timing", no_timing, "write wall_ms as 0 (reproducible output)");
    fmt.attach(range);

    auto* survey = app.add_subcommand("survey", "oracle check of catalog entries over [lo, hi]");
    survey->add_option("lo", lo)->required();
    survey->add_option("hi", hi)->required();
    survey->add_option("--source", source_text,
                       "theorem2|theorem1_i|theorem1_ii|theorem1_iii|panaitopol (default: all)");
    survey->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    survey->add_flag("--no-timing", no_timing, "write wall_ms as 0 (reproducible output)");
    fmt.attach(survey);

    auto* control = app.add_subcommand("negative-control",
                                       "oracle run of x^2+y^2+z^2; must flag exactly 4^k(8l+7)");
    control->add_option("lo", lo)->required();
    control->add_option("hi", hi)->required();
    control->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    control->add_flag("--no-timing", no_timing, "write wall_ms as 0 (reproducible output)");
    fmt.attach(control);

    auto* count = app.add_subcommand("count", "number of integer triples representing n");
    count->add_option("spec", spec_text, "e.g. 1*sq+3*sq+1*tri")->required();
    count->add_option("n", n)->required();
    fmt.attach(count);

    auto* witnesses = app.add_subcommand("witnesses", "lexicographically first witnesses of n");
    witnesses->add_option("spec", spec_text, "e.g. 1*sq+3*sq+1*tri")->required();
    witnesses->add_option("n", n)->required();
    witnesses->add_option("--limit", limit, "maximum number of witnesses")->check(CLI::PositiveNumber);
    fmt.attach(witnesses);

    std::string cert_text;
    auto* check = app.add_subcommand("check", "verify a certificate given as JSON (exit 1 if wrong)");
    check->add_option("certificate", cert_text, R"(e.g. '{"form":"x2+3t+t","n":1,"x":-1,"y":-1,"z":-1}')")
        ->required();

    bool odd_only = false;
    auto* search = app.add_subcommand("search", "smallest n in [lo, hi] a form misses (exit 1 if found)");
    search->add_option("spec", spec_text, "e.g. 1*sq+2*sq+3*sq")->required();
    search->add_option("lo", lo)->required();
    search->add_option("hi", hi)->required();
    search->add_flag("--odd-only", odd_only, "only test positive odd n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto out_fmt = fmt.resolve();
        const bool timing = !no_timing;
        const mixsq::survey_options opt{jobs};

        if (*represent) {
            const auto form = mixsq::parse_form_name(form_text);
            if (!form)
                throw usage_error("unknown form '" + form_text + "'");
            if (n > mixsq::max_input)
                throw usage_error("n exceeds the input ceiling 2^55");
            const auto cert = mixsq::represent(*form, n);
            if (recheck && !mixsq::verify(cert)) {
                std::cerr << "certificate failed verification\n";
                return exit_counterexample;
            }
            switch (out_fmt) {
            case mixsq::output_format::json: std::cout << mixsq::certificate_json(cert) << '\n'; break;
            case mixsq::output_format::csv: std::cout << mixsq::certificate_csv({cert}); break;
            case mixsq::output_format::human: std::cout << mixsq::certificate_human(cert) << '\n'; break;
            }
            return exit_ok;
        }

        if (*range) {
            check_bounds(lo, hi);
            const auto forms = parse_forms(form_names);
            const auto mode = *mixsq::parse_mode(mode_text);
            return emit_reports(mixsq::verify_theorem2_range(lo, hi, mode, opt, forms), out_fmt, timing);
        }

        if (*survey) {
            check_bounds(lo, hi);
            std::optional<mixsq::catalog_source> source;
            if (!source_text.empty()) {
                source = mixsq::parse_source(source_text);
                if (!source)
                    throw usage_error("unknown source '" + source_text + "'");
            }
            return emit_reports(mixsq::verify_catalog(source, lo, hi, opt), out_fmt, timing);
        }

        if (*control) {
            check_bounds(lo, hi);
            const auto report = mixsq::negative_control(lo, hi, opt);
            std::cout << mixsq::render({report}, out_fmt, {timing});
            if (!mixsq::negative_control_matches(report)) {
                std::cerr << "negative control mismatch: flagged set differs from 4^k(8l+7)\n";
                return exit_counterexample;
            }
            return exit_ok;
        }

        if (*count) {
            const auto spec = mixsq::parse_form_spec(spec_text);
            if (n > mixsq::max_input)
                throw usage_error("n exceeds the input ceiling 2^55");
            const auto c = mixsq::count(spec, n);
            switch (out_fmt) {
            case mixsq::output_format::json: {
                nlohmann::ordered_json j;
                j["spec"] = spec.to_string();
                j["n"] = n;
                j["count"] = c;
                std::cout << j.dump() << '\n';
                break;
            }
            case mixsq::output_format::csv:
                std::cout << "spec,n,count\n" << spec.to_string() << ',' << n << ',' << c << '\n';
                break;
            case mixsq::output_format::human: std::cout << c << '\n'; break;
            }
            return exit_ok;
        }

        if (*check) {
            const auto cert = mixsq::parse_certificate_json(cert_text);
            const bool ok = mixsq::verify(cert);
            std::cout << (ok ? "valid " : "INVALID ") << mixsq::certificate_json(cert) << '\n';
            return ok ? exit_ok : exit_counterexample;
        }

        if (*search) {
            const auto spec = mixsq::parse_form_spec(spec_text);
            check_bounds(lo, hi);
            const auto filter = odd_only ? mixsq::domain_filter::positive_odd : mixsq::domain_filter::all;
            const auto miss = mixsq::first_counterexample(spec, lo, hi, filter);
            if (!miss) {
                std::cout << "none\n";
                return exit_ok;
            }
            std::cout << *miss << '\n';
            return exit_counterexample;
        }

        if (*witnesses) {
            const auto spec = mixsq::parse_form_spec(spec_text);
            if (n > mixsq::max_input)
                throw usage_error("n exceeds the input ceiling 2^55");
            const auto list = mixsq::witnesses(spec, n, limit);
            switch (out_fmt) {
            case mixsq::output_format::json: {
                nlohmann::ordered_json j;
                j["spec"] = spec.to_string();
                j["n"] = n;
                auto arr = nlohmann::ordered_json::array();
                for (const auto& w : list.witnesses)
                    arr.push_back({w.x, w.y, w.z});
                j["witnesses"] = arr;
                std::cout << j.dump() << '\n';
                break;
            }
            case mixsq::output_format::csv:
                std::cout << "x,y,z\n";
                for (const auto& w : list.witnesses)
                    std::cout << w.x << ',' << w.y << ',' << w.z << '\n';
                break;
            case mixsq::output_format::human:
                for (const auto& w : list.witnesses)
                    std::cout << w.x << ' ' << w.y << ' ' << w.z << '\n';
                break;
            }
            return exit_ok;
        }
    } catch (const mixsq::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (!spec_text.empty() && cert_text.empty())
            std::cerr << "  " << spec_text << "\n  " << std::string(e.position(), ' ') << "^\n";
        return exit_usage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return exit_usage;
    } catch (const mixsq::width_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
