#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/reconfig.hpp"
#include "dicolor/walks.hpp"

namespace dicolor {

enum class verdict { pass, fail, skipped };

inline const char* to_string(verdict v) {
    switch (v) {
        case verdict::pass: return "pass";
        case verdict::fail: return "fail";
        case verdict::skipped: return "skipped";
    }
    return "?";
}

struct claim_result {
    std::string claim_id;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json expected;
    nlohmann::json observed;
    verdict outcome = verdict::fail;
    std::string reason;  // why skipped, or what failed
    double runtime_ms = 0;
};

inline constexpr double default_budget = 5e7;

/// Budget from DICOLOR_BUDGET if set and parseable, else the default.
inline double budget_from_env() {
    if (const char* s = std::getenv("DICOLOR_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && *end == '\0' && v >= 0) return v;
    }
    return default_budget;
}

struct verify_options {
    double budget = default_budget;  // max k^N candidate color functions per instance
    bool heavy = false;
    std::vector<std::string> claims;  // empty: all
    unsigned threads = 0;
    std::uint64_t seed = 20240601;
    std::size_t random_instances = 200;  // per randomized walk check
};

/// k^N, saturating at +inf rather than overflowing.
inline double candidate_functions(std::size_t num_vertices, unsigned k) {
    return std::pow(static_cast<double>(k), static_cast<double>(num_vertices));
}

namespace detail {

using clock = std::chrono::steady_clock;

inline double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

inline claim_result start_result(std::string id, nlohmann::json params) {
    claim_result r;
    r.claim_id = std::move(id);
    r.parameters = std::move(params);
    return r;
}

/// Fills in a skip verdict when the instance exceeds the budget.
inline bool over_budget(claim_result& r, std::size_t num_vertices, unsigned k, double budget) {
    const double cost = candidate_functions(num_vertices, k);
    if (cost <= budget) return false;
    r.outcome = verdict::skipped;
    char buf[96];
    std::snprintf(buf, sizeof buf, "k^N = %.4g exceeds budget %.4g", cost, budget);
    r.reason = buf;
    return true;
}

inline void decide(claim_result& r, bool ok, const std::string& failure) {
    r.outcome = ok ? verdict::pass : verdict::fail;
    if (!ok) r.reason = failure;
}

inline nlohmann::json partition_json(const std::vector<std::vector<vertex>>& cells) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : cells) j.push_back(c);
    return j;
}

/// Cells of a coloring as sorted vertex lists, sorted by first vertex, with
/// vertices translated through the digraph's labels.
inline std::vector<std::vector<vertex>> labelled_partition(const digraph& d, const coloring& c) {
    std::vector<std::vector<vertex>> cells;
    for (unsigned col = 1; col <= c.palette(); ++col) {
        auto cls = c.color_class(static_cast<color>(col));
        if (cls.empty()) continue;
        for (auto& v : cls) v = d.labels().empty() ? v : d.labels()[v];
        std::sort(cls.begin(), cls.end());
        cells.push_back(std::move(cls));
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual checks

struct table_row_expectation {
    unsigned k;
    std::size_t order, size;
    bool connected;
    std::size_t min_degree, max_degree, diameter, radius, girth;
};

/// Embedded rows for D_k(C_7<3>).
inline const std::vector<table_row_expectation>& seven_vertex_census_rows() {
    static const std::vector<table_row_expectation> rows{
        {3, 504, 1512, true, 6, 6, 8, 7, 3},
        {4, 7560, 54684, true, 13, 15, 8, 7, 3},
        {5, 47880, 536760, true, 20, 24, 8, 7, 3},
        {6, 199080, 2997540, true, 27, 33, 8, 7, 3},
    };
    return rows;
}

inline nlohmann::json row_json(std::size_t order, std::size_t size, bool connected, std::size_t dmin,
                               std::size_t dmax, std::optional<std::size_t> diam, std::optional<std::size_t> rad,
                               std::optional<std::size_t> girth) {
    auto o = [](const std::optional<std::size_t>& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(); };
    return {{"order", order},     {"size", size},     {"connected", connected}, {"min_degree", dmin},
            {"max_degree", dmax}, {"diameter", o(diam)}, {"radius", o(rad)},   {"girth", o(girth)}};
}

inline claim_result check_seven_vertex_census(unsigned k, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result("seven_vertex_census", {{"digraph", "C_7<3>"}, {"k", k}});
    const auto& rows = seven_vertex_census_rows();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& row) { return row.k == k; });
    if (it == rows.end()) throw precondition_error("table rows exist for k = 3..6 only");
    r.expected = row_json(it->order, it->size, it->connected, it->min_degree, it->max_degree, it->diameter,
                          it->radius, it->girth);
    if (!detail::over_budget(r, 7, k, opt.budget)) {
        const auto rep = analyze(circulant_tournament({3, 3}), k, {true, opt.threads});
        r.observed = row_json(rep.order, rep.size, rep.is_connected, rep.min_degree, rep.max_degree, rep.diameter,
                              rep.radius, rep.girth);
        detail::decide(r, r.observed == r.expected, "row differs from the embedded values");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// D_2(C_{2n+1}<empty>) is a cycle of length 4n+2 with diameter 2n+1.
inline claim_result check_cycle_proposition(int n, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, std::nullopt};
    auto r = detail::start_result("cyclic_two_colorings_form_cycle", {{"digraph", spec.name()}, {"k", 2}});
    const std::size_t m = 4 * static_cast<std::size_t>(n) + 2;
    r.expected = {{"order", m}, {"connected", true}, {"regular_degree", 2}, {"diameter", 2 * n + 1}};
    if (!detail::over_budget(r, spec.order(), 2, opt.budget)) {
        const auto g = build(circulant_tournament(spec), 2);
        const auto [dmin, dmax] = degree_extrema(g);
        const bool connected = is_mixing(g);
        const auto dr = diameter_radius(g, diameter_scope::whole, {true, opt.threads});
        nlohmann::json reg = dmin == dmax ? nlohmann::json(dmin) : nlohmann::json();
        r.observed = {{"order", g.order()},
                      {"connected", connected},
                      {"regular_degree", reg},
                      {"diameter", dr.defined ? nlohmann::json(dr.diameter) : nlohmann::json()}};
        detail::decide(r, r.observed == r.expected, "not a cycle of the stated length");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Every 2-coloring of C_{2n+1}<empty> splits Z_{2n+1} into {a..a+n} and
/// its complement; the two-coloring partitions match exactly.
inline claim_result check_two_coloring_partition(int n, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, std::nullopt};
    auto r = detail::start_result("cyclic_two_coloring_partition", {{"digraph", spec.name()}});
    const auto d = circulant_tournament(spec);
    std::set<std::pair<vertex_mask, vertex_mask>> expected_cells;
    for (const auto& p : two_coloring_partitions(spec)) expected_cells.insert({to_mask(p.first), to_mask(p.second)});
    r.expected = {{"dichromatic_number", 2}, {"ordered_partitions", expected_cells.size()}, {"triangle_property", true}};
    if (!detail::over_budget(r, spec.order(), 2, opt.budget)) {
        std::set<std::pair<vertex_mask, vertex_mask>> seen;
        for_each_coloring(d, 2, [&](const coloring& c) { seen.insert({c.class_mask(1), c.class_mask(2)}); });
        // Three vertices outside every (n+1)-interval induce a directed triangle.
        const int m = spec.order();
        bool triangles = true;
        for (int x = 0; x < m && triangles; ++x)
            for (int y = x + 1; y < m && triangles; ++y)
                for (int z = y + 1; z < m && triangles; ++z) {
                    bool inside = false;
                    for (int a = 0; a < m && !inside; ++a) {
                        auto in = [&](int v) { return zmod(v - a, m) <= static_cast<vertex>(n); };
                        inside = in(x) && in(y) && in(z);
                    }
                    const std::vector<vertex> s{static_cast<vertex>(x), static_cast<vertex>(y), static_cast<vertex>(z)};
                    if (!inside && is_acyclic_subset(d, s)) triangles = false;
                }
        r.observed = {{"dichromatic_number", dichromatic_number(d)},
                      {"ordered_partitions", seen.size()},
                      {"triangle_property", triangles}};
        detail::decide(r, r.observed == r.expected && seen == expected_cells,
                       "2-colorings do not induce exactly the interval partitions");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Uniquely k-colorable: one partition, and D_k is k! isolated vertices.
/// `expected_cells` (original labels) is compared when given.
inline claim_result check_unique_colorable(const digraph& d, unsigned k,
                                           std::optional<std::vector<std::vector<vertex>>> expected_cells = {},
                                           const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result("unique_colorability_freezes", {{"digraph", describe(d)}, {"k", k}});
    std::size_t factorial = 1;
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    r.expected = {{"partitions", 1}, {"order", factorial}, {"isolated", factorial}};
    if (expected_cells) r.expected["cells"] = detail::partition_json(*expected_cells);
    if (!detail::over_budget(r, d.num_vertices(), k, opt.budget)) {
        const auto g = build(d, k);
        std::set<std::vector<std::vector<vertex>>> parts;
        for (const auto& c : g.colorings()) parts.insert(detail::labelled_partition(d, c));
        r.observed = {{"partitions", parts.size()}, {"order", g.order()}, {"isolated", components(g).isolated_count}};
        if (expected_cells) r.observed["cells"] = parts.size() == 1 ? detail::partition_json(*parts.begin()) : nlohmann::json();
        detail::decide(r, r.observed == r.expected, "not uniquely colorable with the stated partition");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

enum class circulant_family { cyclic, last_jump_reversed };

/// Bound from the relevant theorem, or nullopt when no bound applies.
inline std::optional<std::size_t> diameter_bound(circulant_family fam, int n, unsigned k) {
    const auto nn = static_cast<std::size_t>(n);
    if (fam == circulant_family::cyclic) {
        if (k < 3) return std::nullopt;
        return 4 * nn + 1 + (nn + 1) / 2;
    }
    if (n == 3 && k >= 3) return 8;
    if (k == 3 && n >= 5) return 3 * nn + 4 + (2 * nn + 1) / 3;
    if (n >= 4 && k >= 4 && (2 * nn + 1) != 3 * k) return 4 * nn + 2 + nn / 2;
    if (n >= 4 && (2 * nn + 1) == 3 * k) return 2 * nn + 1 + (2 * nn + 1) / 4;
    return std::nullopt;
}

/// Diameter bound by BFS. In the frozen regime k = (2n+1)/3 the bound is
/// for the component of non-frozen colorings and mixing is not expected.
inline claim_result check_diameter_bound(circulant_family fam, int n, unsigned k, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec = fam == circulant_family::cyclic ? circulant_spec{n, std::nullopt} : circulant_spec{n, n};
    auto r = detail::start_result("diameter_bound", {{"digraph", spec.name()}, {"k", k}});
    const auto bound = diameter_bound(fam, n, k);
    if (!bound) throw precondition_error("no diameter bound is stated for " + spec.name() + " with k = " + std::to_string(k));
    const bool frozen_regime = fam == circulant_family::last_jump_reversed && 2 * n + 1 == 3 * static_cast<int>(k);
    r.expected = {{"connected", !frozen_regime}, {"diameter_at_most", *bound}};
    if (frozen_regime) r.expected["scope"] = "non_frozen_component";
    if (!detail::over_budget(r, spec.order(), k, opt.budget)) {
        const auto g = build(circulant_tournament(spec), k);
        const bool connected = is_mixing(g);
        const auto dr = diameter_radius(g, frozen_regime ? diameter_scope::largest_component : diameter_scope::whole,
                                        {true, opt.threads});
        r.observed = {{"connected", connected}};
        if (dr.defined) {
            r.observed["diameter"] = dr.diameter;
            r.observed["slack"] = static_cast<long long>(*bound) - static_cast<long long>(dr.diameter);
        }
        const bool ok = connected == !frozen_regime && dr.defined && dr.diameter <= *bound;
        detail::decide(r, ok, "connectivity or diameter bound violated");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Isolated vertices of D_{2n'+1}(C_{6n'+3}<3n'+1>) are exactly the frozen
/// constructor image; the rest is one component within the diameter bound.
inline claim_result check_frozen_census(int n_prime, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const int n = 3 * n_prime + 1;
    const unsigned k = static_cast<unsigned>(2 * n_prime + 1);
    const circulant_spec spec{n, n};
    auto r = detail::start_result("frozen_census", {{"digraph", spec.name()}, {"k", k}});
    std::size_t factorial = 1;
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    const std::size_t bound = *diameter_bound(circulant_family::last_jump_reversed, n, k);
    r.expected = {{"isolated", 3 * factorial},
                  {"isolated_equals_constructor_image", true},
                  {"classes_are_forbidden_triangles", true},
                  {"further_components", 1},
                  {"diameter_at_most", bound}};
    if (!detail::over_budget(r, spec.order(), k, opt.budget)) {
        const auto g = build(circulant_tournament(spec), k);
        const auto comps = components(g);
        std::set<coloring_key> isolated;
        for (node_id i = 0; i < g.order(); ++i)
            if (g.degree(i) == 0) isolated.insert(g.key(i));

        std::set<coloring_key> image;
        bool triangles = true;
        std::vector<color> perm(k);
        std::iota(perm.begin(), perm.end(), color{1});
        do {
            for (int l = 0; l < 3; ++l) {
                const auto c = frozen_coloring(n_prime, l, perm);
                image.insert(pack(c));
                for (unsigned col = 1; col <= k; ++col)
                    triangles = triangles && is_forbidden_triangle(spec, c.color_class(static_cast<color>(col)));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::set<node_id> other;
        for (node_id i = 0; i < g.order(); ++i)
            if (g.degree(i) > 0) other.insert(comps.label[i]);
        const auto dr = diameter_radius(g, diameter_scope::largest_component, {true, opt.threads});
        r.observed = {{"isolated", isolated.size()},
                      {"isolated_equals_constructor_image", isolated == image},
                      {"classes_are_forbidden_triangles", triangles},
                      {"further_components", other.size()}};
        if (dr.defined) r.observed["diameter"] = dr.diameter;
        const bool ok = isolated.size() == 3 * factorial && isolated == image && triangles && other.size() == 1 &&
                        dr.defined && dr.diameter <= bound;
        detail::decide(r, ok, "frozen census or non-frozen component bound violated");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Pairwise BFS distances in the family with classes {a}, {a+1..a+n},
/// {a+n+1..a+2n}: at most 3n-1, and at most 2n+1 when the singleton classes
/// have different colors.
inline claim_result check_c_family_distances(int n, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, n};
    auto r = detail::start_result("c_family_distances", {{"digraph", spec.name()}, {"k", 3}});
    r.expected = {{"max_distance_at_most", 3 * n - 1}, {"max_distinct_singleton_distance_at_most", 2 * n + 1}};
    if (!detail::over_budget(r, spec.order(), 3, opt.budget)) {
        const auto g = build(circulant_tournament(spec), 3);
        const auto members = c_family_members(spec);
        std::vector<node_id> ids;
        for (const auto& mbr : members) ids.push_back(*g.index_of(c_family(spec, mbr)));
        long long worst = 0, worst_distinct = 0;
        bool reachable = true;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const auto dist = bfs_distances(g, ids[i]);
            for (std::size_t j = 0; j < ids.size(); ++j) {
                const auto dj = dist[ids[j]];
                if (dj < 0) {
                    reachable = false;
                    continue;
                }
                worst = std::max<long long>(worst, dj);
                if (members[i].class_colors[0] != members[j].class_colors[0])
                    worst_distinct = std::max<long long>(worst_distinct, dj);
            }
        }
        r.observed = {{"max_distance", worst}, {"max_distinct_singleton_distance", worst_distinct}, {"members", ids.size()},
                      {"all_reachable", reachable}};
        const bool ok = reachable && worst <= 3 * n - 1 && worst_distinct <= 2 * n + 1;
        detail::decide(r, ok, "a pair of family members is too far apart");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// The 3-vertex digraph with one digon (a<->b) closed into a triangle.
inline digraph digon_example() {
    const std::vector<arc> arcs{{1, 2}, {2, 0}, {0, 1}, {1, 0}};
    return digraph(3, arcs, std::nullopt, {});
}

inline claim_result check_digon_example(const verify_options& = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result("digon_example_disconnected", {{"digraph", "a<->b, b->c, c->a"}, {"k", 2}});
    r.expected = {{"order", 4}, {"size", 2}, {"components", 2}, {"alpha1_alpha2_adjacent", true},
                  {"alpha1_alpha3_adjacent", false}};
    const auto g = build(digon_example(), 2);
    auto adjacent = [&](const std::string& x, const std::string& y) {
        const auto i = g.index_of(parse_coloring(x, 2));
        const auto j = g.index_of(parse_coloring(y, 2));
        if (!i || !j) return false;
        const auto nb = g.neighbors(*i);
        return std::find(nb.begin(), nb.end(), *j) != nb.end();
    };
    r.observed = {{"order", g.order()},
                  {"size", g.size()},
                  {"components", components(g).count()},
                  {"alpha1_alpha2_adjacent", adjacent("1,2,2", "1,2,1")},
                  {"alpha1_alpha3_adjacent", adjacent("1,2,2", "2,1,2")}};
    detail::decide(r, r.observed == r.expected, "dicoloring graph differs from the four-coloring example");
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// A digon-free digraph of order n is k-mixing for k in {n-1, n, n+1} with
/// diameter at most 2n.
inline std::vector<claim_result> check_n_plus_one_mixing(const digraph& d, const verify_options& opt = {}) {
    if (d.has_digon()) throw precondition_error("the order-based mixing bound needs a digon-free digraph");
    std::vector<claim_result> out;
    const std::size_t n = d.num_vertices();
    for (std::size_t k = std::max<std::size_t>(1, n > 0 ? n - 1 : 1); k <= n + 1; ++k) {
        const auto t0 = detail::clock::now();
        auto r = detail::start_result("order_mixing", {{"digraph", describe(d)}, {"k", k}});
        r.expected = {{"connected", true}, {"diameter_at_most", 2 * n}};
        if (!detail::over_budget(r, n, static_cast<unsigned>(k), opt.budget)) {
            const auto g = build(d, static_cast<unsigned>(k));
            const auto dr = diameter_radius(g, diameter_scope::whole, {true, opt.threads});
            r.observed = {{"connected", is_mixing(g)}};
            if (dr.defined) r.observed["diameter"] = dr.diameter;
            detail::decide(r, is_mixing(g) && dr.defined && dr.diameter <= 2 * n, "not mixing within 2n");
        }
        r.runtime_ms = detail::ms_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

inline claim_result check_st7_witness(unsigned k, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result("st7_distance_witness",
                                  {{"digraph", "C_7<3>"}, {"k", k}, {"alpha", "1,1,1,2,2,2,3"}, {"beta", "2,2,2,3,1,1,1"}});
    r.expected = {{"distance", 8}};
    if (!detail::over_budget(r, 7, k, opt.budget)) {
        const auto d = circulant_tournament({3, 3});
        const auto dist = distance(d, parse_coloring("1,1,1,2,2,2,3", k), parse_coloring("2,2,2,3,1,1,1", k));
        r.observed = {{"distance", dist ? nlohmann::json(*dist) : nlohmann::json()}};
        detail::decide(r, r.observed == r.expected, "distance differs");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Forbidden triangles {i, i+n, i+n+1} are maximal acyclic sets.
inline claim_result check_forbidden_triangles(int n, const verify_options& = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, n};
    auto r = detail::start_result("forbidden_triangle_maximal", {{"digraph", spec.name()}});
    const auto d = circulant_tournament(spec);
    const int m = spec.order();
    std::size_t acyclic = 0, maximal = 0;
    for (int i = 0; i < m; ++i) {
        std::vector<vertex> s{zmod(i, m), zmod(i + n, m), zmod(i + n + 1, m)};
        if (!is_acyclic_subset(d, s)) continue;
        ++acyclic;
        bool is_max = true;
        for (int j = 0; j < m && is_max; ++j) {
            if (std::find(s.begin(), s.end(), static_cast<vertex>(j)) != s.end()) continue;
            auto t = s;
            t.push_back(static_cast<vertex>(j));
            if (is_acyclic_subset(d, t)) is_max = false;
        }
        maximal += is_max;
    }
    r.expected = {{"acyclic", m}, {"maximal", m}};
    r.observed = {{"acyclic", acyclic}, {"maximal", maximal}};
    detail::decide(r, r.observed == r.expected, "some forbidden triangle is cyclic or extendable");
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Acyclic sets of C_{2n+1}<n> have at most n vertices, and the n-sets are
/// intervals {a..a+n-1} or {a..a+n+1} minus {a+1, a+n}.
inline claim_result check_max_acyclic(int n, const verify_options& = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, n};
    auto r = detail::start_result("max_acyclic_sets", {{"digraph", spec.name()}});
    const auto d = circulant_tournament(spec);
    const auto subsets = acyclic_subsets(d);
    std::size_t largest = 0, of_size_n = 0, shaped = 0;
    for (vertex_mask s : subsets) {
        const auto vs = from_mask(s);
        largest = std::max(largest, vs.size());
        if (vs.size() == static_cast<std::size_t>(n)) {
            ++of_size_n;
            shaped += classify_max_acyclic(spec, vs) != max_acyclic_shape::not_max_acyclic;
        }
    }
    r.expected = {{"largest", n}, {"all_n_sets_shaped", true}};
    r.observed = {{"largest", largest}, {"all_n_sets_shaped", shaped == of_size_n}, {"n_sets", of_size_n}};
    detail::decide(r, largest == static_cast<std::size_t>(n) && shaped == of_size_n, "acyclic set shape violated");
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Randomized lemma-builder checks

/// A digon-free random oriented graph: each pair gets an arc with
/// probability `density`, direction uniform.
inline digraph random_oriented_graph(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution has(density), fwd(0.5);
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (has(rng)) arcs.push_back(fwd(rng) ? arc{u, v} : arc{v, u});
    return digraph(n, arcs, std::nullopt, {});
}

struct lemma_instance {
    digraph d;
    coloring a, b;
    std::optional<color> pair_class;  // set for the pair lemma
    std::vector<color> classes;       // designated singleton classes
};

/// Samples a hypothesis-satisfying instance for one of the two lemmas.
/// Returns nullopt if rejection sampling gives up.
inline std::optional<lemma_instance> random_lemma_instance(std::mt19937_64& rng, bool with_pair) {
    std::uniform_int_distribution<std::size_t> order_dist(3, 7);
    std::uniform_real_distribution<double> dens(0.3, 1.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const std::size_t n = order_dist(rng);
        const auto d = random_oriented_graph(rng, n, dens(rng));
        const std::size_t max_singles = with_pair ? n - 2 : n;
        if (max_singles < (with_pair ? 1U : 2U)) continue;
        std::uniform_int_distribution<std::size_t> singles_dist(with_pair ? 1 : 2, max_singles);
        const std::size_t singles = singles_dist(rng);
        const std::size_t designated = singles + (with_pair ? 1 : 0);
        std::uniform_int_distribution<unsigned> extra(0, 2);
        const unsigned palette = static_cast<unsigned>(designated) + extra(rng);

        std::vector<vertex> verts(n);
        std::iota(verts.begin(), verts.end(), vertex{0});
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<color> cols(palette);
        std::iota(cols.begin(), cols.end(), color{1});
        std::shuffle(cols.begin(), cols.end(), rng);

        std::vector<color> bc(n, 0);
        std::size_t pos = 0;
        std::optional<color> pc;
        std::vector<vertex> region;
        if (with_pair) {
            pc = cols[0];
            bc[verts[0]] = bc[verts[1]] = *pc;
            region = {verts[0], verts[1]};
            pos = 2;
        }
        std::vector<color> designated_singles(cols.begin() + (with_pair ? 1 : 0),
                                              cols.begin() + static_cast<long>(designated));
        for (color c : designated_singles) {
            region.push_back(verts[pos]);
            bc[verts[pos++]] = c;
        }
        // Remaining vertices use colors outside the designated set.
        const std::vector<color> rest(cols.begin() + static_cast<long>(designated), cols.end());
        if (pos < n && rest.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick_rest(0, rest.empty() ? 0 : rest.size() - 1);
        for (std::size_t i = pos; i < n; ++i) bc[verts[i]] = rest[pick_rest(rng)];
        coloring b(bc, palette);
        if (!is_valid(d, b)) continue;

        std::uniform_int_distribution<unsigned> any_color(1, palette);
        for (int tries = 0; tries < 50; ++tries) {
            auto ac = bc;
            for (vertex v : region) ac[v] = static_cast<color>(any_color(rng));
            coloring a(ac, palette);
            if (is_valid(d, a)) return lemma_instance{d, a, b, pc, designated_singles};
        }
    }
    return std::nullopt;
}

inline claim_result check_lemma_walks(bool with_pair, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result(with_pair ? "singletons_plus_pair_walks" : "singleton_class_walks",
                                  {{"instances", opt.random_instances}, {"seed", opt.seed}});
    r.expected = {{"valid", opt.random_instances}, {"within_bound", opt.random_instances},
                  {"at_least_bfs_distance", opt.random_instances}};
    std::mt19937_64 rng(opt.seed + (with_pair ? 1 : 0));
    std::size_t valid = 0, bounded = 0, sandwich = 0, generated = 0, tight = 0;
    std::string first_problem;
    for (std::size_t i = 0; i < opt.random_instances; ++i) {
        auto inst = random_lemma_instance(rng, with_pair);
        if (!inst) continue;
        ++generated;
        const auto w = with_pair ? walk_singletons_plus_pair(inst->d, inst->a, inst->b, *inst->pair_class, inst->classes)
                                 : walk_singleton_classes(inst->d, inst->a, inst->b, inst->classes);
        const std::size_t bound = inst->classes.size() + (with_pair ? 2 : 0);
        const auto verdict_ = validate_walk(inst->d, w);
        const bool reaches = w.end() == inst->b;
        valid += verdict_.ok && reaches;
        bounded += w.length() <= bound;
        const auto dist = distance(inst->d, inst->a, inst->b);
        sandwich += dist && w.length() >= *dist;
        tight += dist && *dist == bound;
        if (first_problem.empty() && !(verdict_.ok && reaches && w.length() <= bound && dist && w.length() >= *dist))
            first_problem = "instance " + std::to_string(i) + ": " + format_walk(w);
    }
    r.observed = {{"valid", valid}, {"within_bound", bounded}, {"at_least_bfs_distance", sandwich},
                  {"bound_attained", tight}};
    if (generated != opt.random_instances) r.observed["generated"] = generated;
    detail::decide(r, valid == opt.random_instances && bounded == valid && sandwich == valid,
                   first_problem.empty() ? "instance generation fell short" : first_problem);
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Checks the class-to-interval builder on random valid colorings.
inline claim_result check_extend_interval(int n, unsigned k, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    const circulant_spec spec{n, n};
    auto r = detail::start_result("extend_class_to_interval",
                                  {{"digraph", spec.name()}, {"k", k}, {"instances", opt.random_instances}, {"seed", opt.seed}});
    const auto d = circulant_tournament(spec);
    std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(n) << 8) ^ k);
    std::uniform_int_distribution<unsigned> col(1, k);
    std::size_t ok_count = 0, done = 0;
    std::string first_problem;
    const int m = spec.order();
    while (done < opt.random_instances) {
        std::vector<color> cs(static_cast<std::size_t>(m));
        for (auto& c : cs) c = static_cast<color>(col(rng));
        coloring a(cs, k);
        if (!is_valid(d, a)) continue;
        const auto j = static_cast<color>(col(rng));
        if (is_forbidden_triangle(spec, a.color_class(j))) continue;
        ++done;
        const auto w = extend_class_to_interval(d, a, j);
        const auto end = w.end();
        const auto cls = end.color_class(j);
        bool interval = false;
        for (int s = 0; s < m && !interval; ++s) {
            std::vector<vertex> iv;
            for (int t = 0; t < n; ++t) iv.push_back(zmod(s + t, m));
            std::sort(iv.begin(), iv.end());
            interval = iv == cls;
        }
        const std::size_t c0 = a.color_class(j).size();
        const std::size_t bound = c0 <= 1 ? static_cast<std::size_t>(n) - c0 : static_cast<std::size_t>(n) + 2 - c0;
        const auto dist = distance(d, a, end);
        const bool good = validate_walk(d, w).ok && interval && w.length() <= bound && dist && w.length() >= *dist;
        ok_count += good;
        if (!good && first_problem.empty()) first_problem = "class " + std::to_string(j) + ": " + format_walk(w);
    }
    r.expected = {{"sound", opt.random_instances}};
    r.observed = {{"sound", ok_count}};
    detail::decide(r, ok_count == opt.random_instances, first_problem);
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

/// Backtracking and partition-method enumeration agree as sets.
inline claim_result check_enumeration_methods(const circulant_spec& spec, unsigned k, const verify_options& opt = {}) {
    const auto t0 = detail::clock::now();
    auto r = detail::start_result("enumeration_methods_agree", {{"digraph", spec.name()}, {"k", k}});
    r.expected = {{"identical", true}};
    if (!detail::over_budget(r, spec.order(), k, opt.budget)) {
        const auto d = circulant_tournament(spec);
        const auto x = enumerate_backtrack(d, k);
        auto y = enumerate_by_partitions(d, k);
        std::sort(y.begin(), y.end(), colex_less);
        r.observed = {{"identical", x == y}, {"count", x.size()}};
        detail::decide(r, x == y, "the two enumerations differ");
    }
    r.runtime_ms = detail::ms_since(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Registry

struct claim_entry {
    std::string id;
    std::string statement;
    std::function<std::vector<claim_result>(const verify_options&)> run;
};

namespace detail {

inline claim_result heavy_skip(claim_result r) {
    r.outcome = verdict::skipped;
    r.reason = "heavy instance; enable with --heavy";
    return r;
}

}  // namespace detail

/// Fixed, ordered registry of claims. Each entry may produce several
/// parameterized results.
inline const std::vector<claim_entry>& registry() {
    using R = std::vector<claim_result>;
    using O = verify_options;
    static const std::vector<claim_entry> entries{
        {"digon_example_disconnected", "3-vertex digraph with a digon has a disconnected 2-dicoloring graph",
         [](const O& o) { return R{check_digon_example(o)}; }},
        {"unique_colorability_freezes", "C_{2n+1}<n> - {0} is uniquely 2-colorable; D_2 is two isolated vertices",
         [](const O& o) {
             R out;
             for (int n : {4, 5}) {
                 const auto d = delete_vertex(circulant_tournament({n, n}), 0);
                 std::vector<vertex> lo, hi;
                 for (int v = 1; v <= n; ++v) lo.push_back(static_cast<vertex>(v));
                 for (int v = n + 1; v <= 2 * n; ++v) hi.push_back(static_cast<vertex>(v));
                 out.push_back(check_unique_colorable(d, 2, std::vector<std::vector<vertex>>{lo, hi}, o));
             }
             return out;
         }},
        {"singleton_class_walks", "recoloring into singleton classes takes at most |classes| steps",
         [](const O& o) { return R{check_lemma_walks(false, o)}; }},
        {"singletons_plus_pair_walks", "singleton classes plus one pair take at most |classes| + 2 steps",
         [](const O& o) { return R{check_lemma_walks(true, o)}; }},
        {"order_mixing", "digon-free digraphs of order n are k-mixing for k >= n-1 with diameter <= 2n",
         [](const O& o) {
             R out;
             for (const circulant_spec s : {circulant_spec{2, std::nullopt}, circulant_spec{2, 2}})
                 for (auto& r : check_n_plus_one_mixing(circulant_tournament(s), o)) out.push_back(std::move(r));
             for (auto& r : check_n_plus_one_mixing(digraph(1, {}, std::nullopt, {}), o)) out.push_back(std::move(r));
             return out;
         }},
        {"cyclic_two_coloring_partition", "2-colorings of C_{2n+1}<empty> split Z_{2n+1} into (n+1)- and n-intervals",
         [](const O& o) {
             R out;
             for (int n = 1; n <= 6; ++n) out.push_back(check_two_coloring_partition(n, o));
             return out;
         }},
        {"cyclic_two_colorings_form_cycle", "D_2(C_{2n+1}<empty>) is the cycle C_{4n+2} with diameter 2n+1",
         [](const O& o) {
             R out;
             for (int n = 1; n <= 6; ++n) out.push_back(check_cycle_proposition(n, o));
             return out;
         }},
        {"cyclic_diameter_bound", "D_k(C_{2n+1}<empty>) is mixing for k >= 3 with diameter <= 4n+1+floor((n+1)/2)",
         [](const O& o) {
             R out;
             for (int n : {2, 3, 4}) {
                 auto r = check_diameter_bound(circulant_family::cyclic, n, 3, o);
                 r.claim_id = "cyclic_diameter_bound";
                 out.push_back(std::move(r));
             }
             return out;
         }},
        {"forbidden_triangle_maximal", "{i, i+n, i+n+1} is a maximal acyclic set of C_{2n+1}<n>",
         [](const O& o) {
             R out;
             for (int n = 3; n <= 7; ++n) out.push_back(check_forbidden_triangles(n, o));
             return out;
         }},
        // n = 3 is excluded: there the forbidden triangles are a third shape.
        {"max_acyclic_sets", "acyclic sets of C_{2n+1}<n>, n >= 4, have at most n vertices, with two shapes at size n",
         [](const O& o) {
             R out;
             for (int n = 4; n <= 7; ++n) out.push_back(check_max_acyclic(n, o));
             return out;
         }},
        {"extend_class_to_interval", "a non-triangle class extends to an n-interval within the stated step count",
         [](const O& o) {
             R out;
             for (auto [n, k] : {std::pair{4, 3u}, {4, 4u}, {5, 3u}, {5, 4u}}) out.push_back(check_extend_interval(n, k, o));
             return out;
         }},
        {"c_family_distances", "family members are within 3n-1, and within 2n+1 with distinct singleton colors",
         [](const O& o) {
             R out;
             for (int n : {3, 4, 5}) out.push_back(check_c_family_distances(n, o));
             return out;
         }},
        {"st7_distance_witness", "d(1,1,1,2,2,2,3 ; 2,2,2,3,1,1,1) = 8 in D_k(C_7<3>)",
         [](const O& o) {
             R out;
             for (unsigned k : {3u, 4u, 5u}) out.push_back(check_st7_witness(k, o));
             return out;
         }},
        {"three_color_diameter_bound", "D_3(C_{2n+1}<n>) is mixing for n >= 5 with diameter <= 3n+4+floor((2n+1)/3)",
         [](const O& o) {
             R out;
             for (int n : {5, 6}) {
                 auto r = check_diameter_bound(circulant_family::last_jump_reversed, n, 3, o);
                 r.claim_id = "three_color_diameter_bound";
                 out.push_back(std::move(r));
             }
             return out;
         }},
        {"many_color_diameter_bound", "D_k(C_{2n+1}<n>) is mixing for n, k >= 4, k != (2n+1)/3, with diameter <= 4n+2+floor(n/2)",
         [](const O& o) {
             R out;
             for (auto [n, k, heavy] : {std::tuple{4, 4u, false}, {4, 5u, true}, {5, 4u, true}}) {
                 if (heavy && !o.heavy) {
                     const circulant_spec s{n, n};
                     out.push_back(detail::heavy_skip(
                         detail::start_result("many_color_diameter_bound", {{"digraph", s.name()}, {"k", k}})));
                     continue;
                 }
                 auto r = check_diameter_bound(circulant_family::last_jump_reversed, n, k, o);
                 r.claim_id = "many_color_diameter_bound";
                 out.push_back(std::move(r));
             }
             return out;
         }},
        {"frozen_census", "D_{(2n+1)/3}(C_{2n+1}<n>) has 3((2n+1)/3)! isolated vertices plus one component",
         [](const O& o) {
             R out;
             for (int np : {1, 2}) out.push_back(check_frozen_census(np, o));
             return out;
         }},
        {"enumeration_methods_agree", "backtracking and partition enumeration produce the same colorings",
         [](const O& o) {
             R out;
             for (int n : {1, 2, 3, 4})
                 for (std::optional<int> j : {std::optional<int>{}, std::optional<int>{n}})
                     for (unsigned k = 2; k <= 4; ++k)
                         if (!(j && *j == n && n == 1)) out.push_back(check_enumeration_methods({n, j}, k, o));
             return out;
         }},
        {"seven_vertex_census", "order, size, degrees, diameter, radius and girth of D_k(C_7<3>) for k = 3..6",
         [](const O& o) {
             R out;
             for (unsigned k = 3; k <= 6; ++k) {
                 if (k == 6 && !o.heavy) {
                     out.push_back(detail::heavy_skip(detail::start_result("seven_vertex_census", {{"digraph", "C_7<3>"}, {"k", k}})));
                     continue;
                 }
                 out.push_back(check_seven_vertex_census(k, o));
             }
             return out;
         }},
    };
    return entries;
}

inline std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
}

/// Runs the selected claims in registry order. Unknown ids are an error.
inline std::vector<claim_result> run_all(const verify_options& opt) {
    for (const auto& id : opt.claims) {
        const auto ids = claim_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw precondition_error("unknown claim id: " + id);
    }
    std::vector<claim_result> out;
    for (const auto& e : registry()) {
        if (!opt.claims.empty() && std::find(opt.claims.begin(), opt.claims.end(), e.id) == opt.claims.end()) continue;
        for (auto& r : e.run(opt)) {
            r.claim_id = e.id;
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline bool any_failed(const std::vector<claim_result>& rs) {
    return std::any_of(rs.begin(), rs.end(), [](const auto& r) { return r.outcome == verdict::fail; });
}

inline nlohmann::json to_json(const claim_result& r) {
    nlohmann::json j = {{"claim_id", r.claim_id},   {"parameters", r.parameters}, {"expected", r.expected},
                        {"observed", r.observed},   {"verdict", to_string(r.outcome)}, {"runtime_ms", r.runtime_ms}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

inline nlohmann::json to_json(const std::vector<claim_result>& rs, const verify_options& opt) {
    std::size_t pass = 0, fail = 0, skip = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        arr.push_back(to_json(r));
        pass += r.outcome == verdict::pass;
        fail += r.outcome == verdict::fail;
        skip += r.outcome == verdict::skipped;
    }
    return {{"budget", opt.budget},
            {"heavy", opt.heavy},
            {"seed", opt.seed},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skip}}},
            {"results", arr}};
}

inline std::string format_result_line(const claim_result& r) {
    std::string line = std::string(to_string(r.outcome)) + "  " + r.claim_id + " " + r.parameters.dump();
    if (r.outcome != verdict::skipped) line += "  observed=" + r.observed.dump();
    if (!r.reason.empty()) line += "  (" + r.reason + ")";
    return line;
}

}  // namespace dicolor
