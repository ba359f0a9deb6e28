#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "test_common.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

std::set<std::vector<int>> as_set(const std::vector<coloring>& cs) {
    std::set<std::vector<int>> out;
    for (const auto& c : cs) out.insert(ints(c));
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& cs) { return {cs.begin(), cs.end()}; }

const std::vector<circulant_spec> small_specs = {
    {1, std::nullopt}, {1, 1}, {2, std::nullopt}, {2, 1}, {2, 2}, {3, std::nullopt}, {3, 2}, {3, 3}, {4, 4}, {4, 1},
};

}  // namespace

TEST(Coloring, RejectsColorsOutsidePalette) {
    EXPECT_THROW(coloring({1, 2, 4}, 3), precondition_error);
    EXPECT_THROW(coloring({0, 1}, 2), precondition_error);
    EXPECT_THROW(coloring({1}, 0), precondition_error);
    EXPECT_NO_THROW(coloring({1, 1, 1}, 5));
}

TEST(Coloring, ClassesAndRecolor) {
    const auto c = col("1,1,1,2,2,2,3", 3);
    EXPECT_EQ(c.color_class(2), (std::vector<vertex>{3, 4, 5}));
    EXPECT_EQ(c.class_mask(3), vertex_mask{1} << 6);
    EXPECT_EQ(c.with(6, 1).color_class(1), (std::vector<vertex>{0, 1, 2, 6}));
    EXPECT_EQ(c[6], 3);
}

TEST(Validity, StSevenPairIsValidAtThreeColors) {
    const auto d = circulant_tournament({3, 3});
    EXPECT_TRUE(is_valid(d, col("1,1,1,2,2,2,3", 3)));
    EXPECT_TRUE(is_valid(d, col("2,2,2,3,1,1,1", 3)));
}

TEST(Validity, CertificateIsARealCycle) {
    const auto d = circulant_tournament({3, 3});
    const auto bad = col("1,1,1,1,2,2,3", 3);
    const auto cyc = find_cyclic_class(d, bad);
    ASSERT_TRUE(cyc.has_value());
    EXPECT_EQ(cyc->class_color, 1);
    EXPECT_EQ(cyc->members, (std::vector<vertex>{0, 1, 2, 3}));
    ASSERT_GE(cyc->cycle.size(), 2u);
    for (std::size_t i = 0; i < cyc->cycle.size(); ++i) {
        EXPECT_EQ(bad[cyc->cycle[i]], 1);
        EXPECT_TRUE(d.has_arc(cyc->cycle[i], cyc->cycle[(i + 1) % cyc->cycle.size()]));
    }
    EXPECT_FALSE(is_valid(d, bad));
    EXPECT_FALSE(find_cyclic_class(d, col("1,1,1,2,2,2,3", 3)).has_value());
}

TEST(Validity, LengthMismatchThrows) {
    EXPECT_THROW(is_valid(circulant_tournament({1, std::nullopt}), col("1,2", 2)), precondition_error);
}

TEST(Validity, AgreesWithOracleOnEveryFunction) {
    const circulant_spec spec{3, 3};
    const auto d = circulant_tournament(spec);
    const auto o = oracle_of(spec);
    for (coloring_key key = 0; key < 2187; ++key) {
        const auto c = unpack(key, 7, 3);
        ASSERT_EQ(is_valid(d, c), oracle::valid(o, ints(c), 3)) << format_coloring(c);
    }
}

TEST(Keys, PackUnpackRoundTripAndOrder) {
    EXPECT_EQ(pack(col("1,1,1", 3)), 0u);
    EXPECT_EQ(pack(col("2,1,1", 3)), 1u);
    EXPECT_EQ(pack(col("1,2,1", 3)), 3u);
    EXPECT_EQ(pack(col("3,3,3", 3)), 26u);
    for (coloring_key key = 0; key < 81; ++key) {
        const auto c = unpack(key, 4, 3);
        EXPECT_EQ(pack(c), key);
        if (key) {
            EXPECT_TRUE(colex_less(unpack(key - 1, 4, 3), c));
        }
    }
    EXPECT_THROW(unpack(81, 4, 3), precondition_error);
}

TEST(Keys, CapacityLimit) {
    EXPECT_TRUE(key_fits(64, 2));
    EXPECT_FALSE(key_fits(65, 2));
    EXPECT_TRUE(key_fits(40, 3));
    EXPECT_FALSE(key_fits(41, 3));
    std::vector<color> big(41, 1);
    EXPECT_THROW(pack(coloring(big, 3)), capacity_error);
}

TEST(Enumerate, MatchesOracleOnSmallCirculants) {
    for (const auto& spec : small_specs)
        for (unsigned k = 1; k <= 4; ++k) {
            if (std::pow(k, spec.order()) > 3e5) continue;
            const auto d = circulant_tournament(spec);
            const auto lib = enumerate_backtrack(d, k);
            ASSERT_EQ(as_set(lib), as_set(oracle::all_colorings(oracle_of(spec), static_cast<int>(k))))
                << spec.name() << " k=" << k;
            EXPECT_EQ(lib.size(), as_set(lib).size());
        }
}

TEST(Enumerate, IncreasingKeyOrder) {
    const auto cs = enumerate_backtrack(circulant_tournament({3, 3}), 3);
    ASSERT_EQ(cs.size(), 504u);
    for (std::size_t i = 1; i < cs.size(); ++i) ASSERT_LT(pack(cs[i - 1]), pack(cs[i]));
}

TEST(Enumerate, DigonDigraphHasFourTwoColorings) {
    const auto cs = enumerate_backtrack(digon_example(), 2);
    EXPECT_EQ(as_set(cs), as_set(oracle::all_colorings(oracle_digon(), 2)));
    EXPECT_EQ(as_set(cs), (std::set<std::vector<int>>{{1, 2, 2}, {1, 2, 1}, {2, 1, 2}, {2, 1, 1}}));
}

TEST(Enumerate, TooFewColorsGivesNothing) {
    EXPECT_TRUE(enumerate_backtrack(circulant_tournament({3, 3}), 2).empty());
    EXPECT_EQ(enumerate_backtrack(transitive_tournament(5), 1).size(), 1u);
}

TEST(Enumerate, ParallelMatchesSequential) {
    const auto d = circulant_tournament({3, 3});
    const auto seq = enumerate_backtrack(d, 4);
    for (unsigned t : {1u, 2u, 3u, 8u}) EXPECT_EQ(enumerate_backtrack_parallel(d, 4, t), seq) << t << " threads";
}

TEST(Partitions, AcyclicSubsetsMatchFilter) {
    for (const auto& spec : small_specs) {
        const auto d = circulant_tournament(spec);
        const auto o = oracle_of(spec);
        std::vector<vertex_mask> expect;
        for (vertex_mask s = 1; s < (vertex_mask{1} << spec.order()); ++s) {
            const auto vs = from_mask(s);
            if (oracle::acyclic(o, std::vector<int>(vs.begin(), vs.end()))) expect.push_back(s);
        }
        EXPECT_EQ(acyclic_subsets(d), expect) << spec.name();
    }
    // Non-circulant path.
    EXPECT_EQ(acyclic_subsets(digon_example()), (std::vector<vertex_mask>{1, 2, 4, 5, 6}));
}

TEST(Partitions, SameSetAsBacktracking) {
    for (const auto& spec : small_specs)
        for (unsigned k = 1; k <= 4; ++k) {
            const auto d = circulant_tournament(spec);
            auto a = enumerate_backtrack(d, k);
            auto b = enumerate_by_partitions(d, k);
            std::sort(b.begin(), b.end(), [](const coloring& x, const coloring& y) { return pack(x) < pack(y); });
            ASSERT_EQ(a, b) << spec.name() << " k=" << k;
        }
    EXPECT_EQ(as_set(enumerate_by_partitions(digon_example(), 2)), as_set(enumerate_backtrack(digon_example(), 2)));
}

TEST(Symmetry, ColorPermutationPreservesValidity) {
    const auto d = circulant_tournament({3, 3});
    const std::vector<color> perm{3, 1, 2};
    const auto c = col("1,1,1,2,2,2,3", 3);
    const auto p = permute_colors(c, perm);
    EXPECT_EQ(format_coloring(p), "3,3,3,1,1,1,2");
    EXPECT_TRUE(is_valid(d, p));
    EXPECT_THROW(permute_colors(c, std::vector<color>{1, 1, 2}), precondition_error);
    EXPECT_THROW(permute_colors(c, std::vector<color>{1, 2}), precondition_error);
}

TEST(Symmetry, RotationPreservesValiditySet) {
    const circulant_spec spec{3, 3};
    const auto d = circulant_tournament(spec);
    const auto all = enumerate_backtrack(d, 3);
    const auto base = as_set(all);
    for (long long s : {1LL, 3LL, -2LL, 7LL}) {
        std::set<std::vector<int>> rotated;
        for (const auto& c : all) rotated.insert(ints(rotate(c, d, s)));
        EXPECT_EQ(rotated, base) << "shift " << s;
    }
    EXPECT_EQ(format_coloring(rotate(col("1,2,3,1,1,1,1", 3), spec, 1)), "1,1,2,3,1,1,1");
    EXPECT_THROW(rotate(col("1,2,1", 2), digon_example(), 1), precondition_error);
}

TEST(TextFormat, ColoringParse) {
    EXPECT_EQ(format_coloring(col(" 1, 2 ,3")), "1,2,3");
    EXPECT_EQ(col("1,1,2").palette(), 2u);
    EXPECT_EQ(col("1,1,2", 5).palette(), 5u);
    EXPECT_THROW(col("1,,2"), parse_error);
    EXPECT_THROW(col("1,x"), parse_error);
    EXPECT_THROW(col("0,1"), parse_error);
    EXPECT_THROW(col(""), parse_error);
    EXPECT_THROW(col("1,4", 3), parse_error);
}
