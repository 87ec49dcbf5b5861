#include <gtest/gtest.h>

#include <mixsq/arith.hpp>

#include "brute_force.hpp"

using namespace mixsq;

TEST(Triangular, Examples) {
    EXPECT_EQ(triangular(3), 6u);
    EXPECT_EQ(triangular(-4), 6u);
    EXPECT_EQ(triangular(0), 0u);
    EXPECT_EQ(triangular(-1), 0u);
}

TEST(Triangular, ReflectionAndSign) {
    for (integer i = -10000; i <= 10000; ++i) {
        ASSERT_EQ(triangular(i), triangular(-i - 1)) << i;
        ASSERT_EQ(static_cast<integer>(triangular(i)), brute::tri(i)) << i;
    }
}

TEST(Triangular, OverflowIsAnError) {
    EXPECT_NO_THROW(triangular(integer{1} << 31));
    EXPECT_THROW(triangular(integer{1} << 40), width_error);
    EXPECT_THROW(triangular(-(integer{1} << 40)), width_error);
}

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(10), 3u);
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(144), 12u);
}

TEST(Isqrt, FloorProperty) {
    for (natural m = 0; m <= 1'000'000; ++m) {
        const natural r = isqrt(m);
        ASSERT_LE(r * r, m);
        ASSERT_GT((r + 1) * (r + 1), m);
    }
}

TEST(Isqrt, NearPerfectSquaresAtFullWidth) {
    for (natural r : {natural{3037000499}, natural{4294967295}, natural{1} << 27, natural{94906265}}) {
        EXPECT_EQ(isqrt(r * r), r);
        EXPECT_EQ(isqrt(r * r - 1), r - 1);
        if (r < 4294967295u) {
            EXPECT_EQ(isqrt(r * r + 2 * r), r);
        }
    }
    EXPECT_EQ(isqrt(~natural{0}), 4294967295u);
}

TEST(IsSquare, Examples) {
    EXPECT_TRUE(is_square(49));
    EXPECT_FALSE(is_square(50));
    EXPECT_TRUE(is_square(0));
}

TEST(IsTriangular, MatchesDefinition) {
    std::vector<bool> tri(5051, false);
    for (integer i = 0; i <= 100; ++i)
        tri[brute::tri(i)] = true;
    for (natural v = 0; v <= 5050; ++v)
        EXPECT_EQ(is_triangular(v), tri[v]) << v;
}

TEST(StripFours, Examples) {
    EXPECT_EQ(strip_fours(28), (four_power_split{1, 7}));
    EXPECT_EQ(strip_fours(7), (four_power_split{0, 7}));
    EXPECT_EQ(strip_fours(48), (four_power_split{2, 3}));
    EXPECT_THROW(strip_fours(0), domain_error);
}

TEST(ThreeSquareFeasible, Examples) {
    EXPECT_FALSE(is_three_square_feasible(7));
    EXPECT_FALSE(is_three_square_feasible(28));
    EXPECT_TRUE(is_three_square_feasible(11));
    EXPECT_TRUE(is_three_square_feasible(0));
}

TEST(ThreeSquareFeasible, AgreesWithTripleLoop) {
    // Sieve all sums of three squares up to the bound rather than search per m.
    constexpr natural limit = 100'000;
    std::vector<bool> hit(limit + 1, false);
    for (natural a = 0; a * a <= limit; ++a)
        for (natural b = 0; b <= a && a * a + b * b <= limit; ++b)
            for (natural c = 0; c <= b && a * a + b * b + c * c <= limit; ++c)
                hit[a * a + b * b + c * c] = true;
    for (natural m = 0; m <= limit; ++m)
        ASSERT_EQ(is_three_square_feasible(m), hit[m]) << m;
}

TEST(InputCeiling, RejectsAboveTwoToThe55) {
    EXPECT_NO_THROW(check_input(max_input));
    EXPECT_THROW(check_input(max_input + 1), width_error);
}
