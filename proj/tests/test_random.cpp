#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace morsenorm;
using namespace morsenorm::testing;

TEST(RandomComplex, Examples) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        EXPECT_EQ(random_complex(1, 0, 0.3, seed).simplices(), point().simplices());
        EXPECT_EQ(random_complex(3, 1, 1.0, seed).simplices(), triangle_boundary().simplices());
    }
    auto k = random_complex(5, 2, 0.5, 42);
    for (const auto& s : k.simplices()) {
        for (const auto& f : s.boundary()) EXPECT_TRUE(k.contains(f));
    }
}

TEST(RandomComplex, InvalidParameters) {
    EXPECT_THROW(random_complex(0, 1, 0.5, 1), Error);
    EXPECT_THROW(random_complex(3, -1, 0.5, 1), Error);
    EXPECT_THROW(random_complex(3, 1, 1.5, 1), Error);
}

TEST(RandomField, Examples) {
    EXPECT_TRUE(random_field(point(), 7).empty());
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto w = random_field(triangle_boundary(), seed);
        EXPECT_LE(w.size(), 2u);
        EXPECT_TRUE(is_admissible(triangle_boundary(), w));
    }
}

TEST(Generators, DeterministicPerSeed) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto a = random_complex(5, 3, 0.4, seed);
        auto b = random_complex(5, 3, 0.4, seed);
        ASSERT_EQ(a.simplices(), b.simplices());
        EXPECT_EQ(random_field(a, seed), random_field(b, seed));
        EXPECT_EQ(random_morse(a, seed), random_morse(b, seed));
    }
}

TEST(Generators, OutputsAreAdmissibleAndMorse) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto k = random_complex(1 + static_cast<int>(seed % 7), static_cast<int>(seed % 4), 0.5, seed);
        auto w = random_field(k, seed);
        EXPECT_TRUE(validate_field(k, w).empty());
        EXPECT_TRUE(is_admissible(k, w));
        auto f = random_morse_for_field(k, w, seed);
        EXPECT_TRUE(is_morse(k, f).empty());
        EXPECT_EQ(gradient(k, f), w);
        auto g = random_morse(k, seed);
        EXPECT_TRUE(is_morse(k, g).empty());
    }
}

TEST(RandomMonotoneInflation, PreservesOrderAndStaysNonNegative) {
    auto k = triangle_boundary();
    auto ranks = to_integer_ranks(k, running_morse());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_monotone_inflation(ranks, seed);
        EXPECT_TRUE(equivalent(k, ranks, g));
        for (const auto& [s, v] : g.values()) {
            EXPECT_GE(v, 0);
            for (const auto& [t, u] : g.values()) EXPECT_EQ(ranks(s) < ranks(t), v < u);
        }
    }
}
