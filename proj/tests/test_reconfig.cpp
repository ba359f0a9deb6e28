#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "test_common.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

struct instance {
    circulant_spec spec;
    unsigned k;
};

// Small enough that the oracle's all-sources BFS stays fast.
const std::vector<instance> small_instances = {
    {{1, std::nullopt}, 2}, {{1, std::nullopt}, 3}, {{2, std::nullopt}, 2}, {{2, std::nullopt}, 3},
    {{2, 2}, 3},            {{3, 3}, 3},            {{3, std::nullopt}, 2}, {{3, 1}, 3},
    {{4, 4}, 2},            {{2, 1}, 4},
};

/// Oracle nodes of the largest component, ties to the lowest first node.
std::vector<int> largest_component(const oracle::state_graph& g) {
    const auto label = oracle::components(g);
    std::map<int, int> size;
    for (int l : label) ++size[l];
    int best = 0;
    for (auto [l, s] : size)
        if (s > size[best]) best = l;
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (label[i] == best) out.push_back(i);
    return out;
}

}  // namespace

TEST(DicoloringGraph, MatchesOracleStatistics) {
    for (const auto& [spec, k] : small_instances) {
        const auto og = oracle::build(oracle_of(spec), static_cast<int>(k));
        const auto g = build(circulant_tournament(spec), k);
        const std::string tag = spec.name() + " k=" + std::to_string(k);
        ASSERT_EQ(g.order(), static_cast<std::size_t>(og.order())) << tag;
        EXPECT_EQ(g.size(), og.size()) << tag;
        const auto comps = components(g);
        EXPECT_EQ(comps.count(), static_cast<std::size_t>(oracle::count_components(og))) << tag;

        std::size_t lo = SIZE_MAX, hi = 0, isolated = 0;
        for (const auto& a : og.adj) {
            lo = std::min(lo, a.size());
            hi = std::max(hi, a.size());
            isolated += a.empty();
        }
        if (g.order()) {
            EXPECT_EQ(degree_extrema(g), std::make_pair(lo, hi)) << tag;
        }
        EXPECT_EQ(comps.isolated_count, isolated) << tag;

        if (!g.order()) continue;
        const auto scope = largest_component(og);
        const auto expect = oracle::eccentricity_stats(og, scope);
        for (bool orbit : {false, true}) {
            const auto r = diameter_radius(g, diameter_scope::largest_component, {orbit, 2});
            ASSERT_TRUE(r.defined) << tag;
            EXPECT_EQ(r.scope_size, scope.size()) << tag;
            EXPECT_EQ(r.diameter, static_cast<std::size_t>(expect.diameter)) << tag;
            EXPECT_EQ(r.radius, static_cast<std::size_t>(expect.radius)) << tag;
        }
        const auto whole = diameter_radius(g, diameter_scope::whole);
        EXPECT_EQ(whole.defined, comps.count() == 1) << tag;

        const auto og_girth = oracle::girth(og);
        const auto lib_girth = girth(g);
        EXPECT_EQ(lib_girth.has_value(), og_girth.has_value()) << tag;
        if (lib_girth && og_girth) {
            EXPECT_EQ(*lib_girth, static_cast<std::size_t>(*og_girth)) << tag;
        }
    }
}

TEST(DicoloringGraph, EdgesDifferInExactlyOneVertex) {
    const auto g = build(circulant_tournament({3, 3}), 4);
    for (node_id i = 0; i < g.order(); ++i)
        for (node_id j : g.neighbors(i)) {
            int diff = 0;
            for (vertex v = 0; v < 7; ++v) diff += g.at(i)[v] != g.at(j)[v];
            ASSERT_EQ(diff, 1);
        }
}

TEST(DicoloringGraph, IndexLookup) {
    const auto g = build(circulant_tournament({3, 3}), 3);
    const auto a = col("1,1,1,2,2,2,3", 3);
    const auto i = g.index_of(a);
    ASSERT_TRUE(i.has_value());
    EXPECT_EQ(g.at(*i), a);
    EXPECT_EQ(g.key(*i), pack(a));
    EXPECT_FALSE(g.index_of(col("1,1,1,1,2,2,3", 3)).has_value());
    for (node_id j = 1; j < g.order(); ++j) ASSERT_LT(g.key(j - 1), g.key(j));
}

TEST(DicoloringGraph, ImplicitNeighborsMatchGraph) {
    const auto d = circulant_tournament({3, 3});
    const auto g = build(d, 4);
    for (node_id i = 0; i < g.order(); i += 97) {
        std::set<coloring> implicit;
        for (const auto& c : neighbors(d, g.at(i))) implicit.insert(c);
        std::set<coloring> explicit_nb;
        for (node_id j : g.neighbors(i)) explicit_nb.insert(g.at(j));
        EXPECT_EQ(implicit, explicit_nb);
    }
}

TEST(Cycle, TwoColoringsOfCyclicFamilyFormACycle) {
    for (int n = 1; n <= 6; ++n) {
        const auto g = build(circulant_tournament({n, std::nullopt}), 2);
        EXPECT_EQ(g.order(), static_cast<std::size_t>(4 * n + 2));
        EXPECT_EQ(g.size(), g.order());
        EXPECT_EQ(degree_extrema(g), std::make_pair(std::size_t{2}, std::size_t{2}));
        EXPECT_TRUE(is_mixing(g));
        const auto r = diameter_radius(g, diameter_scope::whole);
        EXPECT_EQ(r.diameter, static_cast<std::size_t>(2 * n + 1));
        EXPECT_EQ(girth(g), std::optional<std::size_t>(4 * n + 2));
    }
}

TEST(DigonDigraph, DicoloringGraphDisconnected) {
    const auto g = build(digon_example(), 2);
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(components(g).count(), 2u);
    EXPECT_FALSE(is_mixing(g));
    EXPECT_FALSE(is_freezable(g));
    auto node = [&](const char* s) { return *g.index_of(col(s, 2)); };
    const auto nb = g.neighbors(node("1,2,2"));
    EXPECT_NE(std::find(nb.begin(), nb.end(), node("1,2,1")), nb.end());
    EXPECT_EQ(std::find(nb.begin(), nb.end(), node("2,1,2")), nb.end());
    EXPECT_FALSE(girth(g).has_value());
    const auto r = diameter_radius(g, diameter_scope::largest_component);
    EXPECT_EQ(r.diameter, 1u);
    EXPECT_EQ(r.scope_size, 2u);
}

TEST(UniqueColorability, DeletedVertexLeavesTwoFrozenColorings) {
    for (int n : {4, 5}) {
        const auto d = delete_vertex(circulant_tournament({n, n}), 0);
        const auto g = build(d, 2);
        ASSERT_EQ(g.order(), 2u) << n;
        EXPECT_EQ(components(g).isolated_count, 2u);
        std::set<std::set<vertex>> partition;
        for (const auto& c : g.colorings())
            for (color x : {1, 2}) {
                std::set<vertex> cls;
                for (vertex v : c.color_class(x)) cls.insert(d.labels()[v]);
                partition.insert(cls);
            }
        std::set<vertex> low, high;
        for (int v = 1; v <= n; ++v) low.insert(static_cast<vertex>(v));
        for (int v = n + 1; v <= 2 * n; ++v) high.insert(static_cast<vertex>(v));
        EXPECT_EQ(partition, (std::set<std::set<vertex>>{low, high}));
    }
}

TEST(Distance, StSevenPair) {
    const auto d = circulant_tournament({3, 3});
    for (unsigned k : {3u, 4u}) {
        const auto a = col("1,1,1,2,2,2,3", k), b = col("2,2,2,3,1,1,1", k);
        EXPECT_EQ(distance(d, a, b), std::optional<std::size_t>(8)) << k;
        const auto g = build(d, k);
        EXPECT_EQ(bfs_distances(g, *g.index_of(a))[*g.index_of(b)], 8);
        const auto path = shortest_path(d, a, b);
        ASSERT_TRUE(path.has_value());
        ASSERT_EQ(path->size(), 9u);
        EXPECT_EQ(path->front(), a);
        EXPECT_EQ(path->back(), b);
        for (std::size_t i = 1; i < path->size(); ++i) {
            EXPECT_TRUE(is_valid(d, (*path)[i]));
            int diff = 0;
            for (vertex v = 0; v < 7; ++v) diff += (*path)[i - 1][v] != (*path)[i][v];
            EXPECT_EQ(diff, 1);
        }
    }
}

TEST(Distance, TrivialAndUnreachable) {
    const auto d = circulant_tournament({3, 3});
    const auto a = col("1,1,1,2,2,2,3", 3);
    EXPECT_EQ(distance(d, a, a), std::optional<std::size_t>(0));
    const auto dd = delete_vertex(circulant_tournament({4, 4}), 0);
    const auto cs = enumerate_backtrack(dd, 2);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_FALSE(distance(dd, cs[0], cs[1]).has_value());
    EXPECT_THROW(distance(d, a, col("1,1,1,1,2,2,3", 3)), precondition_error);
}

TEST(Distance, MatchesOracleImplicitBfs) {
    const circulant_spec spec{3, 3};
    const auto d = circulant_tournament(spec);
    const auto o = oracle_of(spec);
    const auto all = enumerate_backtrack(d, 3);
    for (std::size_t i = 0; i < all.size(); i += 61)
        for (std::size_t j = 5; j < all.size(); j += 83) {
            const auto lib = distance(d, all[i], all[j]);
            const auto ref = oracle::implicit_distance(o, 3, ints(all[i]), ints(all[j]));
            ASSERT_EQ(lib.has_value(), ref.has_value());
            if (lib) {
                EXPECT_EQ(*lib, static_cast<std::size_t>(*ref));
            }
        }
}

TEST(Orbits, CanonicalKeyIsOrbitInvariant) {
    const circulant_spec spec{3, 3};
    const auto c = col("1,1,1,2,2,2,3", 3);
    const auto key = canonical_key(c, true);
    const std::vector<std::vector<color>> perms = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}};
    for (const auto& p : perms)
        for (long long r = 0; r < 7; ++r) EXPECT_EQ(canonical_key(rotate(permute_colors(c, p), spec, r), true), key);
    EXPECT_NE(canonical_key(col("1,1,1,2,2,3,3", 3), true), key);
    EXPECT_EQ(canonical_key(col("2,2,1", 2), false), canonical_key(col("1,1,2", 2), false));
}

// Color permutations are automorphisms of D_k: they preserve every degree.
TEST(Orbits, DegreeInvariantUnderColorPermutationNineVertices) {
    const auto g = build(circulant_tournament({4, 4}), 3);
    std::vector<color> p{1, 2, 3};
    do {
        for (node_id i = 0; i < g.order(); ++i) {
            const auto j = g.index_of(permute_colors(g.at(i), p));
            ASSERT_TRUE(j.has_value());
            ASSERT_EQ(g.degree(*j), g.degree(i));
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Orbits, ReducedSweepMatchesNaiveOnSevenVertexFamily) {
    const auto g = build(circulant_tournament({3, 3}), 3);
    const auto naive = diameter_radius(g, diameter_scope::whole, {false, 1});
    const auto reduced = diameter_radius(g, diameter_scope::whole, {true, 1});
    EXPECT_EQ(naive.sources, 504u);
    EXPECT_LT(reduced.sources, naive.sources);
    EXPECT_EQ(reduced.diameter, naive.diameter);
    EXPECT_EQ(reduced.radius, naive.radius);
    EXPECT_EQ(naive.diameter, 8u);
    EXPECT_EQ(naive.radius, 7u);
}

TEST(Report, TableOneRowForThreeColors) {
    const auto r = analyze(circulant_tournament({3, 3}), 3);
    EXPECT_EQ(r.order, 504u);
    EXPECT_EQ(r.size, 1512u);
    EXPECT_TRUE(r.is_connected);
    EXPECT_EQ(r.min_degree, 6u);
    EXPECT_EQ(r.max_degree, 6u);
    EXPECT_EQ(r.diameter, std::optional<std::size_t>(8));
    EXPECT_EQ(r.radius, std::optional<std::size_t>(7));
    EXPECT_EQ(r.girth, std::optional<std::size_t>(3));
    const auto j = to_json(r);
    EXPECT_EQ(j["order"], 504);
    EXPECT_EQ(j["metadata"]["diameter_scope"], "whole");
    EXPECT_NE(table_row(r).find("1,512"), std::string::npos);
}

TEST(Report, DisconnectedUsesLargestComponent) {
    const auto r = analyze(digon_example(), 2);
    EXPECT_FALSE(r.is_connected);
    EXPECT_EQ(r.num_components, 2u);
    EXPECT_EQ(r.diameter_scope, "largest_component");
    EXPECT_TRUE(r.has_digons);
    EXPECT_FALSE(r.girth.has_value());
    EXPECT_TRUE(to_json(r)["girth"].is_null());
}

TEST(Export, DotAndCsv) {
    const auto g = build(circulant_tournament({2, std::nullopt}), 2);
    const auto dot = to_dot(g);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 10 + 10 + 1);
    EXPECT_NE(dot.find("label=\""), std::string::npos);
    const auto csv = to_csv(build(digon_example(), 2));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "source,target,source_coloring,target_coloring");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_THROW(to_dot(g, 5), capacity_error);
    EXPECT_NO_THROW(to_dot(build(circulant_tournament({3, 3}), 3)));
}
