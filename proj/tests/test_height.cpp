#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace morsenorm;
using namespace morsenorm::testing;

namespace {

// Full 2-simplex with {0}↦{0,1}, {1}↦{1,2}, {0,2}↦{0,1,2}.
VectorField triangle_field() {
    return {{simplex({0}), simplex({0, 1})}, {simplex({1}), simplex({1, 2})}, {simplex({0, 2}), simplex({0, 1, 2})}};
}

HeightFunction triangle_height() {
    return {{simplex({0}), 2},    {simplex({1}), 1},    {simplex({2}), 0},         {simplex({0, 1}), 2},
            {simplex({0, 2}), 3}, {simplex({1, 2}), 1}, {simplex({0, 1, 2}), 3}};
}

}  // namespace

// The frozen expected values are first checked against the
// definition-based oracle, then against both library routes.
TEST(Height, RunningExample) {
    auto k = triangle_boundary();
    EXPECT_EQ(oracle::definition_height(k, running_field()), oracle::as_map(running_height()));
    EXPECT_EQ(height(k, running_field()), running_height());
    EXPECT_EQ(height_oracle(k, running_field()), running_height());
}

TEST(Height, NullFieldIsDimension) {
    auto k = triangle_boundary();
    EXPECT_EQ(oracle::definition_height(k, {}), oracle::as_map(dimension_function(k)));
    EXPECT_EQ(height(k, {}), dimension_function(k));
    EXPECT_EQ(height_oracle(k, {}), dimension_function(k));
}

TEST(Height, SingleVertex) {
    EXPECT_EQ(height(point(), {}), (HeightFunction{{simplex({0}), 0}}));
    EXPECT_EQ(height_oracle(point(), {}), (HeightFunction{{simplex({0}), 0}}));
}

TEST(Height, FullTriangleExample) {
    auto k = full_triangle();
    EXPECT_EQ(oracle::definition_height(k, triangle_field()), oracle::as_map(triangle_height()));
    EXPECT_EQ(height(k, triangle_field()), triangle_height());
    EXPECT_EQ(height_oracle(k, triangle_field()), triangle_height());
}

TEST(Height, InadmissibleFieldCarriesWitness) {
    VectorField w{{simplex({0}), simplex({0, 1})}, {simplex({1}), simplex({1, 2})}, {simplex({2}), simplex({0, 2})}};
    try {
        height(triangle_boundary(), w);
        FAIL();
    } catch (const InadmissibleField& e) {
        EXPECT_EQ(e.witness().index, 0);
        EXPECT_EQ(e.witness().simplices.size(), 4u);
    }
    EXPECT_THROW(height_oracle(triangle_boundary(), w), InadmissibleField);
}

TEST(Height, InvalidField) {
    VectorField w{{simplex({0}), simplex({1, 2})}};
    EXPECT_THROW(height(triangle_boundary(), w), InvalidField);
    EXPECT_THROW(height_oracle(triangle_boundary(), w), InvalidField);
}

TEST(HeightOracle, SizeLimit) {
    auto k = full_triangle();
    try {
        height_oracle(k, {}, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(std::string(e.what()).rfind("oracle size limit", 0), 0u);
    }
    EXPECT_NO_THROW(height_oracle(k, {}, 7));
}

TEST(HeightOracle, EnvironmentOverride) {
    auto k = full_triangle();
    ::setenv("NORMALIZE_ORACLE_LIMIT", "3", 1);
    EXPECT_EQ(oracle_limit_from_env(), 3u);
    EXPECT_THROW(height_oracle(k, {}), Error);
    ::setenv("NORMALIZE_ORACLE_LIMIT", "junk", 1);
    EXPECT_EQ(oracle_limit_from_env(), default_oracle_limit);
    ::unsetenv("NORMALIZE_ORACLE_LIMIT");
    EXPECT_EQ(oracle_limit_from_env(), 64u);
}

class HeightProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HeightProperties, AgreesWithOraclesAndSatisfiesLemmas) {
    const std::uint64_t seed = GetParam();
    auto k = random_complex(3 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3), 0.5, seed);
    if (k.size() > 64) GTEST_SKIP();
    auto w = random_field(k, seed);
    auto h = height(k, w);

    EXPECT_EQ(h, height_oracle(k, w));
    EXPECT_EQ(oracle::as_map(h), oracle::definition_height(k, w));

    // Morse with gradient W.
    EXPECT_TRUE(is_morse(k, h).empty());
    EXPECT_EQ(gradient(k, h), w);

    auto crit = critical_simplices(k, w);
    std::int64_t max_h = 0;
    std::set<std::int64_t> image;
    for (const auto& s : k.simplices()) {
        EXPECT_GE(h(s), s.dimension());
        bool critical_vertex = s.dimension() == 0 && std::find(crit.begin(), crit.end(), s) != crit.end();
        EXPECT_EQ(h(s) == 0, critical_vertex);
        max_h = std::max(max_h, h(s));
        image.insert(h(s));
    }
    for (const auto& [src, dst] : w.pairs()) EXPECT_EQ(h(src), h(dst));
    EXPECT_EQ(image.size(), static_cast<std::size_t>(max_h + 1));

    EXPECT_EQ(height(k, {}), dimension_function(k));
    EXPECT_EQ(height(k, w), h);  // deterministic
}

INSTANTIATE_TEST_SUITE_P(Seeds, HeightProperties, ::testing::Range<std::uint64_t>(0, 60));
