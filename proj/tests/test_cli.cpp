#include <gtest/gtest.h>

#include <mixsq/io.hpp>

#include "cli_runner.hpp"

using cli::run;

TEST(Cli, RepresentJson) {
    const auto r = run("represent 4x2+2t+t 2 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"form\":\"4x2+2t+t\",\"n\":2,\"x\":0,\"y\":-2,\"z\":0}\n");
}

TEST(Cli, RepresentHumanZero) {
    const auto r = run("represent x2+3y2+t 0 --verify");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 = (0)^2 + 3*(0)^2 + t(0)   [x2+3y2+t]\n");
}

TEST(Cli, RepresentCsvRoundTripsThroughJson) {
    const auto csv = run("represent 3x2+2t+t 1 --csv");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "form,n,x,y,z\n3x2+2t+t,1,0,0,-2\n");
    const auto js = run("represent x2+3t+t 98765 --format json");
    const auto c = mixsq::parse_certificate_json(js.out);
    EXPECT_TRUE(mixsq::verify(c));
    EXPECT_EQ(mixsq::certificate_json(c) + "\n", js.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("represent bogus 5").code, 2);
    EXPECT_EQ(run("represent x2+3t+t 36028797018963969").code, 2); // 2^55 + 1
    EXPECT_EQ(run("represent x2+3t+t -3").code, 2);
    EXPECT_EQ(run("represent x2+3t+t").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify-range 10 5").code, 2);
    EXPECT_EQ(run("verify-range 0 5 --mode fast").code, 2);
    EXPECT_EQ(run("verify-range 0 5 --forms x2+3t+t,nope").code, 2);
    EXPECT_EQ(run("verify-range 0 5 --jobs 0").code, 2);
    EXPECT_EQ(run("verify-range 0 5 --json --csv").code, 2);
    EXPECT_EQ(run("survey --source theorem9 0 5").code, 2);
    EXPECT_EQ(run("count '1*sq+' 5").code, 2);
    EXPECT_EQ(run("witnesses '1*sq+1*sq+1*sq' 5 --limit 0").code, 2);
}

TEST(Cli, Count) {
    EXPECT_EQ(run("count '1*sq+3*sq+1*tri' 0").out, "2\n");
    const auto r = run("count '1*sq+3*sq+1*tri' 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "12\n");
    EXPECT_EQ(run("count '1*sq+3*sq+1*tri' 5 --json").out, "{\"spec\":\"1*sq+3*sq+1*tri\",\"n\":5,\"count\":12}\n");
    EXPECT_EQ(run("count '1*sq+3*sq+1*tri' 5 --csv").out, "spec,n,count\n1*sq+3*sq+1*tri,5,12\n");
}

TEST(Cli, Witnesses) {
    EXPECT_EQ(run("witnesses '1*sq+6*tri+1*tri' 3").out, "0 -1 -3\n0 -1 2\n0 0 -3\n0 0 2\n");
    EXPECT_EQ(run("witnesses '1*sq+3*tri+1*tri' 1 --limit 1 --json").out,
              "{\"spec\":\"1*sq+3*tri+1*tri\",\"n\":1,\"witnesses\":[[-1,-1,-1]]}\n");
}

TEST(Cli, VerifyRange) {
    const auto r = run("verify-range 0 0 --csv --no-timing");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                     "x2+3y2+t,0,0,1,,constructive,0\n"
                     "x2+3t+t,0,0,1,,constructive,0\n"
                     "x2+6t+t,0,0,1,,constructive,0\n"
                     "3x2+2t+t,0,0,1,,constructive,0\n"
                     "4x2+2t+t,0,0,1,,constructive,0\n");
    const auto o = run("verify-range 0 500 --mode oracle --forms x2+6t+t,4x2+2t+t --json --no-timing");
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("\"entry\":\"x2+6t+t\""), std::string::npos);
    EXPECT_EQ(o.out.find("\"entry\":\"x2+3t+t\""), std::string::npos);
}

TEST(Cli, JobsDoNotChangeOutput) {
    const auto one = run("verify-range 0 40000 --jobs 1 --json --no-timing");
    const auto four = run("verify-range 0 40000 --jobs 4 --json --no-timing");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(run("survey --source theorem1_ii 0 20000 --jobs 3 --csv --no-timing").out,
              run("survey --source theorem1_ii 0 20000 --csv --no-timing").out);
}

TEST(Cli, SurveyAndNegativeControl) {
    const auto s = run("survey --source panaitopol 1 999 --csv --no-timing");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                     "1*sq+1*sq+2*sq,1,999,500,,oracle,0\n"
                     "1*sq+2*sq+3*sq,1,999,500,,oracle,0\n"
                     "1*sq+2*sq+4*sq,1,999,500,,oracle,0\n");
    const auto c = run("negative-control 0 30 --csv --no-timing");
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "entry,lo,hi,verified,counterexamples,mode,wall_ms\n"
                     "1*sq+1*sq+1*sq,0,30,27,7;15;23;28,oracle,0\n");
}

TEST(Cli, CheckCertificate) {
    EXPECT_EQ(run(R"(check '{"form":"4x2+2t+t","n":2,"x":0,"y":-2,"z":0}')").code, 0);
    EXPECT_EQ(run(R"(check '{"form":"x2+3y2+t","n":2,"x":1,"y":0,"z":0}')").code, 1);
    EXPECT_EQ(run(R"(check '{"form":"x2+3y2+t","n":2}')").code, 2);
    EXPECT_EQ(run("check 'nope'").code, 2);
}

TEST(Cli, Search) {
    const auto miss = run("search '1*sq+1*sq+1*sq' 0 10");
    EXPECT_EQ(miss.code, 1);
    EXPECT_EQ(miss.out, "7\n");
    const auto none = run("search '1*sq+2*sq+3*sq' 1 999 --odd-only");
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(none.out, "none\n");
    EXPECT_EQ(run("search '1*sq+2*sq+3*sq' 9 1").code, 2);
}
