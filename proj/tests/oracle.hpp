#pragma once

// Brute-force reference implementations used as test oracles. Nothing here
// includes the library: digraphs are adjacency matrices built straight from
// the jump definition, colorings are plain int vectors enumerated as all k^N
// functions, and graph statistics come from all-sources BFS.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct digraph {
    int n = 0;
    std::vector<std::vector<char>> adj;  // adj[u][v]: arc u -> v

    explicit digraph(int order) : n(order), adj(order, std::vector<char>(order, 0)) {}
};

/// Z_{2n+1}, arcs a -> a+j for j = 1..n, except jump r (if nonzero) which
/// points a -> a-r.
inline digraph circulant(int half, int reversed = 0) {
    const int m = 2 * half + 1;
    digraph d(m);
    for (int a = 0; a < m; ++a)
        for (int j = 1; j <= half; ++j) {
            const int b = j == reversed ? ((a - j) % m + m) % m : (a + j) % m;
            d.adj[a][b] = 1;
        }
    return d;
}

inline digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    digraph d(n);
    for (auto [u, v] : arcs) d.adj[u][v] = 1;
    return d;
}

inline digraph without_vertex(const digraph& d, int v) {
    digraph out(d.n - 1);
    for (int a = 0, i = 0; a < d.n; ++a) {
        if (a == v) continue;
        for (int b = 0, j = 0; b < d.n; ++b) {
            if (b == v) continue;
            out.adj[i][j] = d.adj[a][b];
            ++j;
        }
        ++i;
    }
    return out;
}

/// Repeatedly strips vertices with no in-neighbor inside the set.
inline bool acyclic(const digraph& d, std::vector<int> s) {
    while (!s.empty()) {
        bool removed = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            bool has_in = false;
            for (int u : s) has_in = has_in || d.adj[u][s[i]];
            if (!has_in) {
                s.erase(s.begin() + static_cast<long>(i));
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

inline bool valid(const digraph& d, const std::vector<int>& colors, int k) {
    for (int c = 1; c <= k; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < d.n; ++v)
            if (colors[v] == c) cls.push_back(v);
        if (!acyclic(d, cls)) return false;
    }
    return true;
}

/// Every valid coloring, as 1-based color vectors, in odometer order.
inline std::vector<std::vector<int>> all_colorings(const digraph& d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(d.n, 1);
    for (;;) {
        if (valid(d, c, k)) out.push_back(c);
        int i = 0;
        while (i < d.n && c[i] == k) c[i++] = 1;
        if (i == d.n) break;
        ++c[i];
    }
    return out;
}

struct state_graph {
    std::vector<std::vector<int>> nodes;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> adj;

    int order() const { return static_cast<int>(nodes.size()); }
    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& a : adj) s += a.size();
        return s / 2;
    }
};

inline state_graph build(const digraph& d, int k) {
    state_graph g;
    g.nodes = all_colorings(d, k);
    for (int i = 0; i < g.order(); ++i) g.index[g.nodes[i]] = i;
    g.adj.resize(g.nodes.size());
    for (int i = 0; i < g.order(); ++i)
        for (int v = 0; v < d.n; ++v)
            for (int c = 1; c <= k; ++c) {
                if (c == g.nodes[i][v]) continue;
                auto t = g.nodes[i];
                t[v] = c;
                if (auto it = g.index.find(t); it != g.index.end()) g.adj[i].push_back(it->second);
            }
    return g;
}

inline std::vector<int> bfs(const state_graph& g, int s) {
    std::vector<int> dist(g.nodes.size(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

/// Component label per node, numbered by first node.
inline std::vector<int> components(const state_graph& g) {
    std::vector<int> label(g.nodes.size(), -1);
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (label[s] >= 0) continue;
        const auto dist = bfs(g, s);
        for (int i = 0; i < g.order(); ++i)
            if (dist[i] >= 0) label[i] = next;
        ++next;
    }
    return label;
}

inline int count_components(const state_graph& g) {
    const auto l = components(g);
    return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

struct ecc_stats {
    int diameter = 0;
    int radius = std::numeric_limits<int>::max();
};

/// Diameter and radius of the nodes in `scope` (eccentricities within their
/// component), by BFS from every node.
inline ecc_stats eccentricity_stats(const state_graph& g, const std::vector<int>& scope) {
    ecc_stats st;
    for (int s : scope) {
        const auto dist = bfs(g, s);
        const int e = *std::max_element(dist.begin(), dist.end());
        st.diameter = std::max(st.diameter, e);
        st.radius = std::min(st.radius, e);
    }
    return st;
}

inline std::vector<int> all_nodes(const state_graph& g) {
    std::vector<int> v(g.nodes.size());
    for (int i = 0; i < g.order(); ++i) v[i] = i;
    return v;
}

/// Shortest cycle length by BFS from every node; nullopt for a forest.
inline std::optional<int> girth(const state_graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.nodes.size(), -1), parent(g.nodes.size(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            for (int w : g.adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Plain BFS over the implicit state space from a until b is reached.
inline std::optional<int> implicit_distance(const digraph& d, int k, const std::vector<int>& a,
                                            const std::vector<int>& b) {
    if (a == b) return 0;
    std::map<std::vector<int>, int> dist{{a, 0}};
    std::deque<std::vector<int>> q{a};
    while (!q.empty()) {
        const auto u = q.front();
        q.pop_front();
        const int du = dist[u];
        for (int v = 0; v < d.n; ++v)
            for (int c = 1; c <= k; ++c) {
                if (c == u[v]) continue;
                auto t = u;
                t[v] = c;
                if (dist.count(t) || !valid(d, t, k)) continue;
                if (t == b) return du + 1;
                dist[t] = du + 1;
                q.push_back(std::move(t));
            }
    }
    return std::nullopt;
}

}  // namespace oracle
