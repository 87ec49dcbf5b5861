#include <gtest/gtest.h>

#include <random>

#include <mixsq/io.hpp>

using namespace mixsq;

TEST(FormSpecGrammar, Parses) {
    const auto s = parse_form_spec("1*sq+3*sq+1*tri");
    EXPECT_EQ(s, two_squares_tri_form(1, 3, 1));
    EXPECT_EQ(parse_form_spec("12*tri+1*sq+7*tri").to_string(), "12*tri+1*sq+7*tri");
}

TEST(FormSpecGrammar, ErrorsCarryPosition) {
    const auto pos = [](std::string_view text) -> std::size_t {
        try {
            parse_form_spec(text);
        } catch (const parse_error& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(pos("1*sq+"), 5u);
    EXPECT_EQ(pos(""), 0u);
    EXPECT_EQ(pos("1sq+1*sq+1*sq"), 1u);
    EXPECT_EQ(pos("1*cube+1*sq+1*sq"), 2u);
    EXPECT_EQ(pos("0*sq+1*sq+1*sq"), 0u);
    EXPECT_EQ(pos("1*sq+1*sq"), 9u);
    EXPECT_EQ(pos("1*sq+1*sq+1*sq+1*sq"), 14u);
    EXPECT_EQ(pos("1*sq-1*sq+1*sq"), 4u);
    EXPECT_EQ(pos("99999999999999999999*sq+1*sq+1*sq"), 0u);
}

TEST(CertificateJson, FixedLayout) {
    const certificate c{mixed_form::four_x2_2t_t, 2, 0, -2, 0};
    EXPECT_EQ(certificate_json(c), R"({"form":"4x2+2t+t","n":2,"x":0,"y":-2,"z":0})");
}

TEST(CertificateJson, RoundTripProperty) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<natural> nd(0, max_input);
    std::uniform_int_distribution<integer> vd(-(integer{1} << 40), integer{1} << 40);
    for (int i = 0; i < 2000; ++i) {
        const certificate c{all_mixed_forms[i % 5], nd(rng), vd(rng), vd(rng), vd(rng)};
        ASSERT_EQ(parse_certificate_json(certificate_json(c)), c);
    }
    for (auto f : all_mixed_forms) {
        const auto c = represent(f, 123457);
        EXPECT_EQ(parse_certificate_json(certificate_json(c)), c);
    }
}

TEST(CertificateJson, RejectsMalformed) {
    EXPECT_THROW(parse_certificate_json("not json"), parse_error);
    EXPECT_THROW(parse_certificate_json("[1,2]"), parse_error);
    EXPECT_THROW(parse_certificate_json(R"({"form":"bogus","n":1,"x":0,"y":0,"z":0})"), parse_error);
    EXPECT_THROW(parse_certificate_json(R"({"form":"x2+3t+t","n":-1,"x":0,"y":0,"z":0})"), parse_error);
    EXPECT_THROW(parse_certificate_json(R"({"form":"x2+3t+t","n":1,"x":0,"y":0})"), parse_error);
    EXPECT_THROW(parse_certificate_json(R"({"form":"x2+3t+t","n":1,"x":0.5,"y":0,"z":0})"), parse_error);
}

TEST(CertificateCsv, HeaderAndRows) {
    EXPECT_EQ(certificate_csv({{mixed_form::x2_3t_t, 1, -1, -1, -1}}), "form,n,x,y,z\nx2+3t+t,1,-1,-1,-1\n");
}

TEST(CertificateHuman, ShowsEachTerm) {
    EXPECT_EQ(certificate_human({mixed_form::four_x2_2t_t, 2, 0, -2, 0}),
              "2 = 4*(0)^2 + 2*t(-2) + t(0)   [4x2+2t+t]");
}

TEST(ReportCsv, Columns) {
    range_report r;
    r.entry = "1*sq+1*sq+1*sq";
    r.source = catalog_source::control;
    r.lo = 0;
    r.hi = 10;
    r.verified = 10;
    r.counterexamples = {7};
    r.wall_time = std::chrono::milliseconds(42);
    EXPECT_EQ(reports_csv({r}), "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                                "1*sq+1*sq+1*sq,0,10,10,7,oracle,42\n");
    r.counterexamples = {7, 8};
    EXPECT_EQ(reports_csv({r}, {false}), "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                                         "1*sq+1*sq+1*sq,0,10,10,7;8,oracle,0\n");
    r.counterexamples.clear();
    EXPECT_EQ(reports_csv({r}, {false}), "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                                         "1*sq+1*sq+1*sq,0,10,10,,oracle,0\n");
}

TEST(ReportJson, Layout) {
    range_report r;
    r.entry = "x2+3t+t";
    r.mode = verify_mode::constructive;
    r.hi = 3;
    r.verified = 4;
    EXPECT_EQ(reports_json({r}, {false}),
              R"([{"entry":"x2+3t+t","source":"theorem2","mode":"constructive","status":"certified",)"
              R"("lo":0,"hi":3,"verified":4,"counterexamples":[],"wall_ms":0}])"
              "\n");
}
