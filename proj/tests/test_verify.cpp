#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "test_common.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

void expect_pass(const claim_result& r) {
    EXPECT_EQ(r.outcome, verdict::pass) << r.claim_id << " " << r.parameters.dump() << " observed " << r.observed.dump()
                                        << " " << r.reason;
}

}  // namespace

TEST(Bounds, Formulas) {
    using F = circulant_family;
    EXPECT_EQ(diameter_bound(F::cyclic, 2, 3), std::optional<std::size_t>(10));
    EXPECT_EQ(diameter_bound(F::cyclic, 3, 3), std::optional<std::size_t>(15));
    EXPECT_EQ(diameter_bound(F::cyclic, 4, 3), std::optional<std::size_t>(19));
    EXPECT_EQ(diameter_bound(F::cyclic, 2, 2), std::nullopt);
    EXPECT_EQ(diameter_bound(F::last_jump_reversed, 5, 3), std::optional<std::size_t>(22));
    EXPECT_EQ(diameter_bound(F::last_jump_reversed, 4, 4), std::optional<std::size_t>(20));
    EXPECT_EQ(diameter_bound(F::last_jump_reversed, 4, 3), std::optional<std::size_t>(11));
    EXPECT_EQ(diameter_bound(F::last_jump_reversed, 3, 3), std::optional<std::size_t>(8));
}

TEST(Checks, SevenVertexCensusSmallRows) {
    for (unsigned k : {3u, 4u}) expect_pass(check_seven_vertex_census(k));
    ASSERT_EQ(seven_vertex_census_rows().size(), 4u);
    EXPECT_EQ(seven_vertex_census_rows().back().order, 199080u);
}

TEST(Checks, SixColorCensusSkippedByRegistryByDefault) {
    verify_options opt;
    opt.claims = {"seven_vertex_census"};
    const auto rs = run_all(opt);
    ASSERT_EQ(rs.size(), 4u);
    EXPECT_EQ(rs.back().parameters["k"], 6);
    EXPECT_EQ(rs.back().outcome, verdict::skipped);
    EXPECT_FALSE(rs.back().reason.empty());
}

TEST(Checks, SixColorCensusWhenCalledDirectly) { expect_pass(check_seven_vertex_census(6)); }

TEST(Checks, CycleAndPartitionFamily) {
    for (int n = 1; n <= 6; ++n) {
        expect_pass(check_cycle_proposition(n));
        expect_pass(check_two_coloring_partition(n));
    }
}

TEST(Checks, DigonExampleAndUniqueColorability) {
    expect_pass(check_digon_example());
    const auto d = delete_vertex(circulant_tournament({4, 4}), 0);
    expect_pass(check_unique_colorable(d, 2, std::vector<std::vector<vertex>>{{1, 2, 3, 4}, {5, 6, 7, 8}}));
    // A wrong expected partition must be reported, not absorbed.
    const auto wrong = check_unique_colorable(d, 2, std::vector<std::vector<vertex>>{{1, 2, 3, 5}, {4, 6, 7, 8}});
    EXPECT_EQ(wrong.outcome, verdict::fail);
}

TEST(Checks, SmallDiameterBounds) {
    for (int n : {2, 3}) expect_pass(check_diameter_bound(circulant_family::cyclic, n, 3));
}

TEST(Checks, FrozenCensusSmallest) {
    const auto r = check_frozen_census(1);
    expect_pass(r);
    EXPECT_EQ(r.observed["isolated"], 18);
}

TEST(Checks, FrozenCensusLargerSkippedByBudget) {
    EXPECT_EQ(check_frozen_census(2).outcome, verdict::skipped);
}

TEST(Checks, StSevenWitness) {
    for (unsigned k : {3u, 4u}) expect_pass(check_st7_witness(k));
}

TEST(Checks, TrianglesAndMaxAcyclic) {
    for (int n = 3; n <= 6; ++n) expect_pass(check_forbidden_triangles(n));
    for (int n = 4; n <= 6; ++n) expect_pass(check_max_acyclic(n));
}

// At n = 3 the forbidden triangles are additional maximum acyclic sets, so
// the two-shape classification does not hold there.
TEST(Checks, MaxAcyclicShapeStatementFailsAtThree) {
    EXPECT_EQ(check_max_acyclic(3).outcome, verdict::fail);
}

TEST(Checks, OrderMixingNeedsDigonFreeInput) {
    for (const auto& r : check_n_plus_one_mixing(circulant_tournament({2, 2}))) expect_pass(r);
    EXPECT_THROW(check_n_plus_one_mixing(digon_example()), precondition_error);
}

TEST(Checks, WalkAndEnumerationChecks) {
    verify_options opt;
    opt.random_instances = 40;
    expect_pass(check_lemma_walks(false, opt));
    expect_pass(check_lemma_walks(true, opt));
    expect_pass(check_extend_interval(4, 3, opt));
    expect_pass(check_c_family_distances(3));
    expect_pass(check_enumeration_methods({3, 3}, 3));
}

TEST(Budget, OverBudgetInstancesAreSkipped) {
    verify_options opt;
    opt.budget = 100;
    EXPECT_EQ(check_seven_vertex_census(3, opt).outcome, verdict::skipped);
    EXPECT_EQ(check_st7_witness(3, opt).outcome, verdict::skipped);
}

TEST(Budget, EnvironmentOverride) {
    ::setenv("DICOLOR_BUDGET", "12345", 1);
    EXPECT_DOUBLE_EQ(budget_from_env(), 12345.0);
    ::setenv("DICOLOR_BUDGET", "nonsense", 1);
    EXPECT_DOUBLE_EQ(budget_from_env(), default_budget);
    ::unsetenv("DICOLOR_BUDGET");
    EXPECT_DOUBLE_EQ(budget_from_env(), default_budget);
}

TEST(Registry, IdsAreUniqueAndStable) {
    const auto ids = claim_ids();
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    EXPECT_EQ(ids.front(), "digon_example_disconnected");
    EXPECT_EQ(ids.back(), "seven_vertex_census");
    for (const auto& e : registry()) EXPECT_FALSE(e.statement.empty()) << e.id;
}

TEST(Registry, UnknownIdThrows) {
    verify_options opt;
    opt.claims = {"no_such_claim"};
    EXPECT_THROW(run_all(opt), precondition_error);
}

TEST(Registry, SelectedClaimsAndJson) {
    verify_options opt;
    opt.claims = {"digon_example_disconnected", "cyclic_two_colorings_form_cycle"};
    const auto rs = run_all(opt);
    ASSERT_EQ(rs.size(), 7u);
    EXPECT_FALSE(any_failed(rs));
    const auto j = to_json(rs, opt);
    EXPECT_EQ(j["summary"]["pass"], 7);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["results"].size(), 7u);
    for (const auto& r : j["results"]) {
        EXPECT_TRUE(r.contains("claim_id"));
        EXPECT_TRUE(r.contains("expected"));
        EXPECT_TRUE(r.contains("observed"));
        EXPECT_EQ(r["verdict"], "pass");
    }
    EXPECT_EQ(format_result_line(rs.front()).rfind("pass", 0), 0u);
}
