#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

using node_id = std::uint32_t;

/// The k-dicoloring graph: every acyclic k-coloring of a digraph, adjacent
/// iff the two differ on exactly one vertex. Immutable after build().
class dicoloring_graph {
   public:
    const digraph& source() const { return d_; }
    unsigned palette() const { return k_; }

    std::size_t order() const { return colorings_.size(); }
    std::size_t size() const { return adjacency_.size() / 2; }

    const coloring& at(node_id i) const { return colorings_[i]; }
    std::span<const coloring> colorings() const { return colorings_; }
    coloring_key key(node_id i) const { return keys_[i]; }

    std::optional<node_id> index_of(const coloring& c) const {
        if (c.size() != d_.num_vertices() || c.palette() != k_) return std::nullopt;
        return index_of_key(pack(c));
    }
    std::optional<node_id> index_of_key(coloring_key key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::span<const node_id> neighbors(node_id i) const {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }
    std::size_t degree(node_id i) const { return offsets_[i + 1] - offsets_[i]; }

    friend dicoloring_graph build(const digraph& d, unsigned k);

   private:
    digraph d_;
    unsigned k_ = 1;
    std::vector<coloring> colorings_;
    std::vector<coloring_key> keys_;
    std::unordered_map<coloring_key, node_id> index_;
    std::vector<std::size_t> offsets_;
    std::vector<node_id> adjacency_;
};

/// Enumerates all acyclic k-colorings, then finds adjacency by probing every
/// single-vertex recoloring of every coloring against the key index.
inline dicoloring_graph build(const digraph& d, unsigned k) {
    const std::size_t n = d.num_vertices();
    const auto powers = key_powers(n, k);

    dicoloring_graph g;
    g.d_ = d;
    g.k_ = k;
    for_each_coloring(d, k, [&](const coloring& c) {
        if (g.colorings_.size() >= std::numeric_limits<node_id>::max())
            throw capacity_error("dicoloring graph order exceeds 2^32", g.colorings_.size());
        g.colorings_.push_back(c);
    });
    g.keys_.reserve(g.colorings_.size());
    g.index_.reserve(g.colorings_.size());
    for (std::size_t i = 0; i < g.colorings_.size(); ++i) {
        g.keys_.push_back(pack(g.colorings_[i]));
        g.index_.emplace(g.keys_.back(), static_cast<node_id>(i));
    }

    g.offsets_.assign(g.colorings_.size() + 1, 0);
    for (std::size_t i = 0; i < g.colorings_.size(); ++i) {
        const coloring& c = g.colorings_[i];
        const coloring_key key = g.keys_[i];
        for (std::size_t v = 0; v < n; ++v) {
            const unsigned cur = c[static_cast<vertex>(v)];
            const coloring_key base = key - (cur - 1U) * powers[v];
            for (unsigned nc = 1; nc <= k; ++nc) {
                if (nc == cur) continue;
                if (auto it = g.index_.find(base + (nc - 1U) * powers[v]); it != g.index_.end())
                    g.adjacency_.push_back(it->second);
            }
        }
        g.offsets_[i + 1] = g.adjacency_.size();
    }

    // Handshake: every adjacency appears once from each endpoint.
    std::size_t forward = 0, backward = 0;
    for (std::size_t i = 0; i < g.colorings_.size(); ++i)
        for (node_id j : g.neighbors(static_cast<node_id>(i))) (j > i ? forward : backward) += 1;
    if (forward != backward || forward * 2 != g.adjacency_.size())
        throw std::logic_error("dicoloring graph adjacency is not symmetric");
    return g;
}

/// Valid colorings one recoloring away from c (computed on the fly).
inline std::vector<coloring> neighbors(const digraph& d, const coloring& c) {
    if (!is_valid(d, c)) throw precondition_error("neighbors() needs a valid coloring");
    std::vector<coloring> out;
    for (std::size_t v = 0; v < c.size(); ++v) {
        const auto vx = static_cast<vertex>(v);
        for (unsigned nc = 1; nc <= c.palette(); ++nc) {
            if (nc == c[vx]) continue;
            bool ok = false;
            if (d.uses_masks()) {
                ok = !detail::closes_cycle(d, c.class_mask(static_cast<color>(nc)), vx);
            } else {
                auto cls = c.color_class(static_cast<color>(nc));
                cls.push_back(vx);
                ok = is_acyclic_subset(d, cls);
            }
            if (ok) out.push_back(c.with(vx, static_cast<color>(nc)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Components

struct component_info {
    std::vector<node_id> label;       // per node
    std::vector<std::size_t> sizes;   // per component, in order of first node
    std::size_t isolated_count = 0;

    std::size_t count() const { return sizes.size(); }
    /// Largest component, ties to the one containing the lowest node.
    std::optional<node_id> largest() const {
        if (sizes.empty()) return std::nullopt;
        return static_cast<node_id>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    }
};

inline component_info components(const dicoloring_graph& g) {
    component_info info;
    const auto unset = std::numeric_limits<node_id>::max();
    info.label.assign(g.order(), unset);
    std::vector<node_id> queue;
    for (node_id s = 0; s < g.order(); ++s) {
        if (info.label[s] != unset) continue;
        const auto id = static_cast<node_id>(info.sizes.size());
        queue.assign(1, s);
        info.label[s] = id;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (node_id w : g.neighbors(queue[h]))
                if (info.label[w] == unset) {
                    info.label[w] = id;
                    queue.push_back(w);
                }
        info.sizes.push_back(queue.size());
        if (queue.size() == 1 && g.degree(s) == 0) ++info.isolated_count;
    }
    return info;
}

inline bool is_mixing(const dicoloring_graph& g) { return g.order() > 0 && components(g).count() == 1; }
inline bool is_freezable(const dicoloring_graph& g) { return components(g).isolated_count > 0; }
inline bool is_mixing(const digraph& d, unsigned k) { return is_mixing(build(d, k)); }
inline bool is_freezable(const digraph& d, unsigned k) { return is_freezable(build(d, k)); }

inline std::pair<std::size_t, std::size_t> degree_extrema(const dicoloring_graph& g) {
    if (g.order() == 0) return {0, 0};
    std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
    for (node_id i = 0; i < g.order(); ++i) {
        lo = std::min(lo, g.degree(i));
        hi = std::max(hi, g.degree(i));
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// Orbit reduction
//
// Color permutations always act as automorphisms of D_k; rotations of Z_m
// do too when the digraph is circulant. Nodes in one orbit share their
// eccentricity and their shortest-cycle length, so sweeps only need one
// source per orbit.

/// Smallest packed key over the orbit of c: each rotation is relabeled by
/// order of first appearance, which picks the least member of its color-
/// permutation class.
inline coloring_key canonical_key(const coloring& c, bool use_rotations) {
    const std::size_t m = c.size();
    const unsigned k = c.palette();
    coloring_key best = std::numeric_limits<coloring_key>::max();
    std::vector<color> relabel(k + 1U);
    for (std::size_t r = 0; r < (use_rotations ? m : 1); ++r) {
        std::fill(relabel.begin(), relabel.end(), 0);
        color next = 1;
        std::vector<color> digits(m);
        for (std::size_t i = 0; i < m; ++i) {
            // rotated(i) = c(i - r)
            const color orig = c[static_cast<vertex>((i + m - r) % m)];
            if (!relabel[orig]) relabel[orig] = next++;
            digits[i] = relabel[orig];
        }
        coloring_key key = 0;
        for (std::size_t i = m; i-- > 0;) key = key * k + (digits[i] - 1U);
        best = std::min(best, key);
    }
    return best;
}

/// One node per orbit among `scope`, keeping the first one seen.
inline std::vector<node_id> orbit_representatives(const dicoloring_graph& g, std::span<const node_id> scope) {
    const bool rot = g.source().is_circulant();
    std::unordered_set<coloring_key> seen;
    std::vector<node_id> reps;
    for (node_id i : scope)
        if (seen.insert(canonical_key(g.at(i), rot)).second) reps.push_back(i);
    return reps;
}

struct sweep_options {
    bool orbit_reduction = true;
    unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(source, scratch) for every source on a small pool; each worker
/// owns its scratch buffer.
template <class Body>
void parallel_sources(std::span<const node_id> sources, unsigned threads, std::size_t scratch_size, Body&& body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<std::int32_t> scratch(scratch_size, -1);
        for (std::size_t i = next++; i < sources.size(); i = next++) body(i, sources[i], scratch);
    };
    threads = std::max(1U, std::min<unsigned>(thread_count(threads), static_cast<unsigned>(sources.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
}

/// BFS eccentricity of s within its component; `dist` must be all -1 and is
/// restored before returning.
inline std::size_t eccentricity(const dicoloring_graph& g, node_id s, std::vector<std::int32_t>& dist) {
    std::vector<node_id> queue{s};
    dist[s] = 0;
    std::int32_t far = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const node_id u = queue[h];
        far = dist[u];
        for (node_id w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    for (node_id u : queue) dist[u] = -1;
    return static_cast<std::size_t>(far);
}

}  // namespace detail

/// Eccentricity of each source (within its component), in source order.
inline std::vector<std::size_t> eccentricities(const dicoloring_graph& g, std::span<const node_id> sources,
                                               unsigned threads = 0) {
    std::vector<std::size_t> ecc(sources.size(), 0);
    detail::parallel_sources(sources, threads, g.order(), [&](std::size_t i, node_id s, std::vector<std::int32_t>& dist) {
        ecc[i] = detail::eccentricity(g, s, dist);
    });
    return ecc;
}

enum class diameter_scope { whole, largest_component };

struct diameter_result {
    bool defined = false;  // false: empty scope, or whole scope of a disconnected graph
    std::size_t diameter = 0;
    std::size_t radius = 0;
    std::size_t scope_size = 0;
    std::size_t sources = 0;  // BFS runs actually performed
};

inline diameter_result diameter_radius(const dicoloring_graph& g, diameter_scope scope, const sweep_options& opt = {}) {
    diameter_result res;
    if (g.order() == 0) return res;
    const component_info comps = components(g);
    if (scope == diameter_scope::whole && comps.count() != 1) return res;

    const node_id target = *comps.largest();
    std::vector<node_id> members;
    for (node_id i = 0; i < g.order(); ++i)
        if (comps.label[i] == target) members.push_back(i);
    res.scope_size = members.size();

    const std::vector<node_id> sources = opt.orbit_reduction ? orbit_representatives(g, members) : members;
    const auto ecc = eccentricities(g, sources, opt.threads);
    res.defined = true;
    res.sources = sources.size();
    res.diameter = *std::max_element(ecc.begin(), ecc.end());
    res.radius = *std::min_element(ecc.begin(), ecc.end());
    return res;
}

/// Length of a shortest cycle, or nullopt when the graph is a forest.
inline std::optional<std::size_t> girth(const dicoloring_graph& g, const sweep_options& opt = {}) {
    if (g.order() == 0) return std::nullopt;
    std::vector<node_id> all(g.order());
    for (node_id i = 0; i < g.order(); ++i) all[i] = i;
    const std::vector<node_id> sources = opt.orbit_reduction ? orbit_representatives(g, all) : all;

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    const std::size_t n = g.order();
    // scratch holds dist in [0, n) and BFS parents in [n, 2n).
    detail::parallel_sources(sources, opt.threads, 2 * n, [&](std::size_t, node_id s, std::vector<std::int32_t>& scratch) {
        if (best.load() == 3) return;  // nothing shorter exists in a simple graph
        auto dist = [&](node_id v) -> std::int32_t& { return scratch[v]; };
        auto parent = [&](node_id v) -> std::int32_t& { return scratch[n + v]; };
        std::vector<node_id> queue{s};
        dist(s) = 0;
        parent(s) = static_cast<std::int32_t>(s);
        std::size_t local = none;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const node_id u = queue[h];
            if (local != none && 2 * static_cast<std::size_t>(dist(u)) + 1 >= local) break;
            for (node_id w : g.neighbors(u)) {
                if (dist(w) < 0) {
                    dist(w) = dist(u) + 1;
                    parent(w) = static_cast<std::int32_t>(u);
                    queue.push_back(w);
                } else if (parent(u) != static_cast<std::int32_t>(w)) {
                    local = std::min(local, static_cast<std::size_t>(dist(u) + dist(w) + 1));
                }
            }
        }
        for (node_id u : queue) dist(u) = -1;
        std::size_t cur = best.load();
        while (local < cur && !best.compare_exchange_weak(cur, local)) {
        }
    });
    if (best.load() == none) return std::nullopt;
    return best.load();
}

// ---------------------------------------------------------------------------
// Implicit distance

namespace detail {

inline std::string state_key(const coloring& c) {
    return std::string(reinterpret_cast<const char*>(c.colors().data()), c.size());
}

}  // namespace detail

/// A shortest recoloring sequence from a to b (both endpoints included), by
/// bidirectional BFS over neighbors() without building D_k. nullopt when b
/// is unreachable from a.
inline std::optional<std::vector<coloring>> shortest_path(const digraph& d, const coloring& a, const coloring& b) {
    if (a.palette() != b.palette()) throw precondition_error("colorings use different palettes");
    if (!is_valid(d, a) || !is_valid(d, b)) throw precondition_error("distance endpoints must be valid colorings");
    if (a == b) return std::vector<coloring>{a};

    struct entry {
        std::string parent;
        std::size_t dist;
    };
    using side = std::unordered_map<std::string, entry>;
    side from_a{{detail::state_key(a), {"", 0}}}, from_b{{detail::state_key(b), {"", 0}}};
    std::vector<coloring> front_a{a}, front_b{b};
    const unsigned k = a.palette();

    auto decode = [&](const std::string& key) {
        return coloring(std::vector<color>(key.begin(), key.end()), k);
    };

    while (!front_a.empty() && !front_b.empty()) {
        const bool expand_a = front_a.size() <= front_b.size();
        side& mine = expand_a ? from_a : from_b;
        side& other = expand_a ? from_b : from_a;
        std::vector<coloring>& front = expand_a ? front_a : front_b;

        std::vector<coloring> next;
        std::optional<std::pair<std::string, std::size_t>> meet;  // node, total length
        for (const coloring& u : front) {
            const std::string ukey = detail::state_key(u);
            const std::size_t du = mine.at(ukey).dist;
            for (coloring& w : neighbors(d, u)) {
                std::string wkey = detail::state_key(w);
                if (mine.count(wkey)) continue;
                mine.emplace(wkey, entry{ukey, du + 1});
                if (auto it = other.find(wkey); it != other.end()) {
                    const std::size_t total = du + 1 + it->second.dist;
                    if (!meet || total < meet->second) meet = std::make_pair(wkey, total);
                }
                next.push_back(std::move(w));
            }
        }
        if (meet) {
            std::vector<coloring> path;
            for (std::string k2 = meet->first; !k2.empty(); k2 = from_a.at(k2).parent) path.push_back(decode(k2));
            std::reverse(path.begin(), path.end());
            for (std::string k2 = from_b.at(meet->first).parent; !k2.empty(); k2 = from_b.at(k2).parent)
                path.push_back(decode(k2));
            return path;
        }
        front = std::move(next);
    }
    return std::nullopt;
}

inline std::optional<std::size_t> distance(const digraph& d, const coloring& a, const coloring& b) {
    auto path = shortest_path(d, a, b);
    if (!path) return std::nullopt;
    return path->size() - 1;
}

/// Single-source BFS distances over a built graph (-1 if unreachable).
inline std::vector<std::int32_t> bfs_distances(const dicoloring_graph& g, node_id s) {
    std::vector<std::int32_t> dist(g.order(), -1);
    std::vector<node_id> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (node_id w : g.neighbors(queue[h]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[h]] + 1;
                queue.push_back(w);
            }
    return dist;
}

// ---------------------------------------------------------------------------
// Reports

struct analysis_report {
    std::string digraph_name;
    std::size_t num_vertices = 0;
    unsigned k = 0;
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t num_components = 0;
    bool is_connected = false;
    std::size_t isolated_count = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::optional<std::size_t> diameter;
    std::optional<std::size_t> radius;
    std::string diameter_scope;  // "whole", "largest_component" or "undefined"
    std::optional<std::size_t> girth;
    bool has_digons = false;
    bool orbit_reduction = true;
    std::size_t bfs_sources = 0;
    double runtime_ms = 0;
};

inline std::string describe(const digraph& d) {
    if (d.provenance()) return d.provenance()->name();
    return "digraph(" + std::to_string(d.num_vertices()) + " vertices, " + std::to_string(d.num_arcs()) + " arcs)";
}

inline analysis_report analyze(const dicoloring_graph& g, const sweep_options& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    analysis_report r;
    r.digraph_name = describe(g.source());
    r.num_vertices = g.source().num_vertices();
    r.k = g.palette();
    r.order = g.order();
    r.size = g.size();
    const auto comps = components(g);
    r.num_components = comps.count();
    r.is_connected = comps.count() == 1;
    r.isolated_count = comps.isolated_count;
    std::tie(r.min_degree, r.max_degree) = degree_extrema(g);
    r.has_digons = g.source().has_digon();
    r.orbit_reduction = opt.orbit_reduction;

    // Disconnected graphs report the largest component's diameter.
    const auto scope = r.is_connected ? diameter_scope::whole : diameter_scope::largest_component;
    const auto dr = diameter_radius(g, scope, opt);
    if (dr.defined) {
        r.diameter = dr.diameter;
        r.radius = dr.radius;
        r.diameter_scope = r.is_connected ? "whole" : "largest_component";
        r.bfs_sources = dr.sources;
    } else {
        r.diameter_scope = "undefined";
    }
    r.girth = girth(g, opt);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Builds D_k(d) and analyzes it; runtime includes the build.
inline analysis_report analyze(const digraph& d, unsigned k, const sweep_options& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = build(d, k);
    auto r = analyze(g, opt);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline nlohmann::json to_json(const analysis_report& r) {
    auto opt = [](const std::optional<std::size_t>& v) -> nlohmann::json {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {
        {"digraph", r.digraph_name},
        {"num_vertices", r.num_vertices},
        {"k", r.k},
        {"order", r.order},
        {"size", r.size},
        {"num_components", r.num_components},
        {"is_connected", r.is_connected},
        {"isolated_count", r.isolated_count},
        {"min_degree", r.min_degree},
        {"max_degree", r.max_degree},
        {"diameter", opt(r.diameter)},
        {"radius", opt(r.radius)},
        {"girth", opt(r.girth)},
        {"runtime_ms", r.runtime_ms},
        {"metadata",
         {{"diameter_scope", r.diameter_scope},
          {"has_digons", r.has_digons},
          {"orbit_reduction", r.orbit_reduction},
          {"bfs_sources", r.bfs_sources}}},
    };
}

namespace detail {

inline std::string thousands(std::size_t v) {
    std::string s = std::to_string(v);
    for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<std::size_t>(i), ",");
    return s;
}

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

inline std::string or_dash(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace detail

inline std::string table_header() {
    using detail::pad;
    return pad("k", 3) + pad("order", 10) + pad("size", 12) + pad("connected", 11) + pad("min_deg", 9) +
           pad("max_deg", 9) + pad("diameter", 10) + pad("radius", 8) + pad("girth", 7);
}

inline std::string table_row(const analysis_report& r) {
    using detail::pad;
    return pad(std::to_string(r.k), 3) + pad(detail::thousands(r.order), 10) + pad(detail::thousands(r.size), 12) +
           pad(r.is_connected ? "yes" : "no", 11) + pad(std::to_string(r.min_degree), 9) +
           pad(std::to_string(r.max_degree), 9) + pad(detail::or_dash(r.diameter), 10) +
           pad(detail::or_dash(r.radius), 8) + pad(detail::or_dash(r.girth), 7);
}

inline std::string to_text(const analysis_report& r) {
    std::ostringstream out;
    out << "D_" << r.k << "(" << r.digraph_name << ")\n";
    out << "  order           " << r.order << "\n";
    out << "  size            " << r.size << "\n";
    out << "  components      " << r.num_components << (r.is_connected ? " (connected)" : " (disconnected)") << "\n";
    out << "  isolated        " << r.isolated_count << "\n";
    out << "  min/max degree  " << r.min_degree << " / " << r.max_degree << "\n";
    out << "  diameter        " << detail::or_dash(r.diameter) << "  [" << r.diameter_scope << "]\n";
    out << "  radius          " << detail::or_dash(r.radius) << "\n";
    out << "  girth           " << (r.girth ? std::to_string(*r.girth) : std::string("acyclic")) << "\n";
    if (r.has_digons) out << "  note            digraph has digons\n";
    out << "  runtime_ms      " << static_cast<long long>(r.runtime_ms) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Export

inline constexpr std::size_t default_export_cap = 2000;

inline void check_export_cap(const dicoloring_graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw capacity_error("dicoloring graph has " + std::to_string(g.order()) + " colorings, export cap is " +
                                 std::to_string(cap),
                             g.order());
}

/// Undirected DOT; nodes labeled by their coloring, in packed-key order.
inline std::string to_dot(const dicoloring_graph& g, std::size_t cap = default_export_cap) {
    check_export_cap(g, cap);
    std::ostringstream out;
    out << "graph D" << g.palette() << " {\n";
    for (node_id i = 0; i < g.order(); ++i) out << "  n" << i << " [label=\"" << format_coloring(g.at(i)) << "\"];\n";
    for (node_id i = 0; i < g.order(); ++i)
        for (node_id j : g.neighbors(i))
            if (i < j) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
    return out.str();
}

/// Edge list with columns source,target,source_coloring,target_coloring.
inline std::string to_csv(const dicoloring_graph& g, std::size_t cap = default_export_cap) {
    check_export_cap(g, cap);
    std::ostringstream out;
    out << "source,target,source_coloring,target_coloring\n";
    for (node_id i = 0; i < g.order(); ++i)
        for (node_id j : g.neighbors(i))
            if (i < j) out << i << ',' << j << ",\"" << format_coloring(g.at(i)) << "\",\"" << format_coloring(g.at(j)) << "\"\n";
    return out.str();
}

}  // namespace dicolor
