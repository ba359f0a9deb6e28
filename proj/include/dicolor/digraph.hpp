#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicolor/error.hpp"

namespace dicolor {

using vertex = std::uint32_t;
using vertex_mask = std::uint64_t;
using arc = std::pair<vertex, vertex>;

inline constexpr std::size_t max_mask_vertices = 64;

/// Residue of x modulo m in [0, m).
inline vertex zmod(long long x, long long m) {
    long long r = x % m;
    return static_cast<vertex>(r < 0 ? r + m : r);
}

inline vertex_mask bit(vertex v) { return vertex_mask{1} << v; }

inline vertex_mask to_mask(std::span<const vertex> vs) {
    vertex_mask m = 0;
    for (vertex v : vs) {
        if (v >= max_mask_vertices) throw capacity_error("vertex id does not fit a 64-bit mask", v);
        m |= bit(v);
    }
    return m;
}

inline std::vector<vertex> from_mask(vertex_mask m) {
    std::vector<vertex> out;
    out.reserve(std::popcount(m));
    while (m) {
        out.push_back(static_cast<vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Parameters of the circulant tournament on Z_{2n+1}: every jump j in 1..n
/// is oriented forward (a -> a+j) except an optional reversed jump, oriented
/// a -> a-j instead.
struct circulant_spec {
    int half_order = 1;
    std::optional<int> reversed_jump;

    int order() const { return 2 * half_order + 1; }
    bool is_cyclic() const { return !reversed_jump.has_value(); }
    /// The <n> family, i.e. the largest jump reversed.
    bool is_last_jump_reversed() const { return reversed_jump && *reversed_jump == half_order; }

    std::string name() const {
        std::string s = "C_" + std::to_string(order()) + "<";
        s += reversed_jump ? std::to_string(*reversed_jump) : std::string("empty");
        return s + ">";
    }

    friend bool operator==(const circulant_spec&, const circulant_spec&) = default;
};

inline void validate(const circulant_spec& spec) {
    if (spec.half_order < 1) throw invalid_spec_error("circulant half order must be >= 1");
    if (spec.order() > 4096) throw invalid_spec_error("circulant order too large");
    if (spec.reversed_jump && (*spec.reversed_jump < 1 || *spec.reversed_jump > spec.half_order)) {
        throw invalid_spec_error("reversed jump " + std::to_string(*spec.reversed_jump) + " outside 1.." +
                                 std::to_string(spec.half_order));
    }
}

/// Loop-free digraph on vertices 0..n-1. Immutable after construction.
///
/// Arcs are kept as sorted adjacency lists in both directions. For n <= 64
/// every vertex also carries in/out bit rows, which is what the induced
/// acyclicity tests run on.
class digraph {
   public:
    digraph() = default;

    digraph(std::size_t n, std::span<const arc> arcs, std::optional<circulant_spec> provenance = std::nullopt,
            std::vector<vertex> labels = {})
        : n_(n), out_(n), in_(n), provenance_(std::move(provenance)), labels_(std::move(labels)) {
        if (n == 0) throw precondition_error("digraph needs at least one vertex");
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n) {
                throw precondition_error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") references a vertex outside 0.." + std::to_string(n - 1));
            }
            if (u == v) throw precondition_error("loop at vertex " + std::to_string(u));
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::sort(out_[v].begin(), out_[v].end());
            std::sort(in_[v].begin(), in_[v].end());
            if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end()) {
                throw precondition_error("duplicate arc out of vertex " + std::to_string(v));
            }
            num_arcs_ += out_[v].size();
        }
        if (n <= max_mask_vertices) {
            out_mask_.resize(n);
            in_mask_.resize(n);
            for (std::size_t v = 0; v < n; ++v) {
                for (vertex w : out_[v]) out_mask_[v] |= bit(w);
                for (vertex w : in_[v]) in_mask_[v] |= bit(w);
            }
        }
        if (labels_.empty()) {
            labels_.resize(n);
            for (std::size_t v = 0; v < n; ++v) labels_[v] = static_cast<vertex>(v);
        } else if (labels_.size() != n) {
            throw precondition_error("label map size does not match vertex count");
        }
        if (provenance_ && !is_tournament()) {
            throw precondition_error("circulant provenance requires a tournament");
        }
    }

    std::size_t num_vertices() const { return n_; }
    std::size_t num_arcs() const { return num_arcs_; }

    bool has_arc(vertex u, vertex v) const {
        if (uses_masks()) return (out_mask_[u] >> v) & 1U;
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    std::span<const vertex> out_neighbors(vertex v) const { return out_[v]; }
    std::span<const vertex> in_neighbors(vertex v) const { return in_[v]; }

    bool uses_masks() const { return !out_mask_.empty(); }
    vertex_mask out_mask(vertex v) const { return out_mask_[v]; }
    vertex_mask in_mask(vertex v) const { return in_mask_[v]; }
    vertex_mask all_mask() const { return n_ == 64 ? ~vertex_mask{0} : (bit(static_cast<vertex>(n_)) - 1); }

    const std::optional<circulant_spec>& provenance() const { return provenance_; }
    bool is_circulant() const { return provenance_.has_value(); }

    /// Original vertex ids (identity unless produced by delete_vertex).
    std::span<const vertex> labels() const { return labels_; }

    std::vector<arc> arcs() const {
        std::vector<arc> out;
        out.reserve(num_arcs_);
        for (std::size_t u = 0; u < n_; ++u)
            for (vertex v : out_[u]) out.emplace_back(static_cast<vertex>(u), v);
        return out;
    }

    bool has_digon() const {
        for (std::size_t u = 0; u < n_; ++u)
            for (vertex v : out_[u])
                if (v > u && has_arc(v, static_cast<vertex>(u))) return true;
        return false;
    }

    bool is_tournament() const {
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (has_arc(static_cast<vertex>(u), static_cast<vertex>(v)) ==
                    has_arc(static_cast<vertex>(v), static_cast<vertex>(u)))
                    return false;
        return true;
    }

   private:
    std::size_t n_ = 0;
    std::size_t num_arcs_ = 0;
    std::vector<std::vector<vertex>> out_;
    std::vector<std::vector<vertex>> in_;
    std::vector<vertex_mask> out_mask_;
    std::vector<vertex_mask> in_mask_;
    std::optional<circulant_spec> provenance_;
    std::vector<vertex> labels_;
};

inline digraph circulant_tournament(const circulant_spec& spec) {
    validate(spec);
    const int m = spec.order();
    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m) * spec.half_order);
    for (int a = 0; a < m; ++a) {
        for (int j = 1; j <= spec.half_order; ++j) {
            const int step = (spec.reversed_jump && *spec.reversed_jump == j) ? -j : j;
            arcs.emplace_back(static_cast<vertex>(a), zmod(a + step, m));
        }
    }
    return digraph(static_cast<std::size_t>(m), arcs, spec);
}

/// Induced subdigraph on V \ {v}, re-indexed to 0..n-2. labels() of the
/// result maps new ids back to the ids of `d`'s own label map.
inline digraph delete_vertex(const digraph& d, vertex v) {
    const std::size_t n = d.num_vertices();
    if (v >= n) throw precondition_error("vertex " + std::to_string(v) + " out of range");
    if (n == 1) throw precondition_error("cannot delete the only vertex");
    auto reindex = [v](vertex u) { return u > v ? u - 1 : u; };
    std::vector<arc> arcs;
    for (auto [a, b] : d.arcs())
        if (a != v && b != v) arcs.emplace_back(reindex(a), reindex(b));
    std::vector<vertex> labels;
    labels.reserve(n - 1);
    for (std::size_t u = 0; u < n; ++u)
        if (u != v) labels.push_back(d.labels()[u]);
    return digraph(n - 1, arcs, std::nullopt, std::move(labels));
}

/// Source elimination on the subdigraph induced by `s` (bit-row path).
inline bool is_acyclic_mask(const digraph& d, vertex_mask s) {
    while (s) {
        vertex_mask sources = 0;
        for (vertex_mask rest = s; rest; rest &= rest - 1) {
            const auto v = static_cast<vertex>(std::countr_zero(rest));
            if ((d.in_mask(v) & s) == 0) sources |= bit(v);
        }
        if (!sources) return false;
        s &= ~sources;
    }
    return true;
}

inline bool is_acyclic_subset(const digraph& d, std::span<const vertex> s) {
    if (d.uses_masks()) return is_acyclic_mask(d, to_mask(s));

    // Kahn over adjacency lists for large digraphs.
    const std::size_t n = d.num_vertices();
    std::vector<char> member(n, 0);
    for (vertex v : s) member.at(v) = 1;
    std::vector<std::size_t> indeg(n, 0);
    std::vector<vertex> stack;
    std::size_t count = 0;
    for (vertex v : s) {
        if (member[v] != 1) continue;
        member[v] = 2;  // dedupe
        ++count;
        for (vertex w : d.in_neighbors(v)) indeg[v] += member[w] ? 1 : 0;
    }
    for (vertex v = 0; v < n; ++v)
        if (member[v] && indeg[v] == 0) stack.push_back(v);
    std::size_t removed = 0;
    while (!stack.empty()) {
        vertex v = stack.back();
        stack.pop_back();
        ++removed;
        for (vertex w : d.out_neighbors(v))
            if (member[w] && --indeg[w] == 0) stack.push_back(w);
    }
    return removed == count;
}

/// A directed cycle inside the subdigraph induced by `s`, listed in arc
/// order; empty if `s` is acyclic.
inline std::vector<vertex> find_cycle(const digraph& d, std::span<const vertex> s) {
    const std::size_t n = d.num_vertices();
    std::vector<char> member(n, 0);
    for (vertex v : s) member.at(v) = 1;
    std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<vertex> parent(n, 0);

    for (vertex root : s) {
        if (state[root]) continue;
        std::vector<std::pair<vertex, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            auto outs = d.out_neighbors(v);
            if (i == outs.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            vertex w = outs[i++];
            if (!member[w]) continue;
            if (state[w] == 1) {
                std::vector<vertex> cycle{w};
                for (vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
            if (state[w] == 0) {
                state[w] = 1;
                parent[w] = v;
                stack.emplace_back(w, 0);
            }
        }
    }
    return {};
}

inline bool is_forbidden_triangle(const circulant_spec& spec, std::span<const vertex> s) {
    if (!spec.is_last_jump_reversed())
        throw precondition_error("forbidden triangles are defined for the C_{2n+1}<n> family only");
    if (s.size() != 3) return false;
    const int m = spec.order();
    const int n = spec.half_order;
    std::vector<vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (vertex i : sorted) {
        std::vector<vertex> t{i, zmod(i + n, m), zmod(i + n + 1, m)};
        std::sort(t.begin(), t.end());
        if (t == sorted) return true;
    }
    return false;
}

enum class max_acyclic_shape { interval, gapped, not_max_acyclic };

inline const char* to_string(max_acyclic_shape s) {
    switch (s) {
        case max_acyclic_shape::interval: return "interval";
        case max_acyclic_shape::gapped: return "gapped";
        default: return "not_max_acyclic";
    }
}

/// Shape of an acyclic vertex set of C_{2n+1}<n> relative to the two maximum
/// acyclic shapes {a..a+n-1} and {a..a+n+1} \ {a+1, a+n}. For n = 3 the
/// forbidden triangles are also acyclic 3-sets and classify as neither.
inline max_acyclic_shape classify_max_acyclic(const circulant_spec& spec, std::span<const vertex> s) {
    if (!spec.is_last_jump_reversed())
        throw precondition_error("classification is defined for the C_{2n+1}<n> family only");
    const digraph d = circulant_tournament(spec);
    if (!is_acyclic_subset(d, s)) throw precondition_error("vertex set is not acyclic");
    const int m = spec.order();
    const int n = spec.half_order;
    std::vector<vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != static_cast<std::size_t>(n)) return max_acyclic_shape::not_max_acyclic;

    auto same = [&](std::vector<vertex> t) {
        std::sort(t.begin(), t.end());
        return t == sorted;
    };
    for (int a = 0; a < m; ++a) {
        std::vector<vertex> interval;
        for (int i = 0; i < n; ++i) interval.push_back(zmod(a + i, m));
        if (same(interval)) return max_acyclic_shape::interval;
    }
    for (int a = 0; a < m; ++a) {
        std::vector<vertex> gapped;
        for (int i = 0; i <= n + 1; ++i)
            if (i != 1 && i != n) gapped.push_back(zmod(a + i, m));
        if (same(gapped)) return max_acyclic_shape::gapped;
    }
    return max_acyclic_shape::not_max_acyclic;
}

namespace detail {

/// True iff adding v to the acyclic class `cls` closes a directed cycle.
inline bool closes_cycle(const digraph& d, vertex_mask cls, vertex v) {
    vertex_mask reach = d.out_mask(v) & cls;
    vertex_mask frontier = reach;
    while (frontier) {
        vertex_mask next = 0;
        for (vertex_mask f = frontier; f; f &= f - 1) next |= d.out_mask(static_cast<vertex>(std::countr_zero(f)));
        next &= cls & ~reach;
        reach |= next;
        frontier = next;
    }
    return (reach & d.in_mask(v)) != 0;
}

inline bool colorable(const digraph& d, std::vector<vertex_mask>& classes, vertex v) {
    if (v == d.num_vertices()) return true;
    // Vertex 0 is pinned to the first color.
    const std::size_t limit = v == 0 ? 1 : classes.size();
    for (std::size_t c = 0; c < limit; ++c) {
        if (closes_cycle(d, classes[c], v)) continue;
        classes[c] |= bit(v);
        if (colorable(d, classes, v + 1)) return true;
        classes[c] &= ~bit(v);
    }
    return false;
}

}  // namespace detail

/// Smallest k admitting an acyclic k-coloring (plain backtracking).
inline int dichromatic_number(const digraph& d) {
    if (!d.uses_masks()) throw capacity_error("dichromatic_number supports at most 64 vertices", d.num_vertices());
    for (std::size_t k = 1;; ++k) {
        std::vector<vertex_mask> classes(k, 0);
        if (detail::colorable(d, classes, 0)) return static_cast<int>(k);
    }
}

/// A 2-coloring written as its two color classes (first = color 1).
struct two_partition {
    std::vector<vertex> first;
    std::vector<vertex> second;

    friend bool operator==(const two_partition&, const two_partition&) = default;
    friend auto operator<=>(const two_partition&, const two_partition&) = default;
};

/// The 2(2n+1) ordered splits of C_{2n+1}<empty> into a half-interval of
/// length n+1 or n and its complement; these are exactly its 2-colorings.
inline std::vector<two_partition> two_coloring_partitions(const circulant_spec& spec) {
    validate(spec);
    if (!spec.is_cyclic()) throw precondition_error("two_coloring_partitions needs the cyclic C_{2n+1}<empty> family");
    const int m = spec.order();
    const int n = spec.half_order;
    std::vector<two_partition> out;
    for (int len : {n + 1, n}) {
        for (int a = 0; a < m; ++a) {
            two_partition p;
            for (int i = 0; i < m; ++i) (i < len ? p.first : p.second).push_back(zmod(a + i, m));
            std::sort(p.first.begin(), p.first.end());
            std::sort(p.second.begin(), p.second.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   digraph <num_vertices>        circulant <n> <j|none>
//   u v                           (arc lines ignored)
//   ...
//
// Blank lines and '#' comments are skipped.

inline digraph parse_digraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<arc> arcs;
    std::vector<std::size_t> arc_lines;
    bool circulant = false;
    circulant_spec spec;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;

        if (!n && !circulant) {
            if (head == "digraph") {
                long long count = 0;
                if (!(ls >> count) || count < 1) throw parse_error("expected 'digraph <num_vertices>'", lineno);
                n = static_cast<std::size_t>(count);
            } else if (head == "circulant") {
                std::string jump;
                if (!(ls >> spec.half_order >> jump)) throw parse_error("expected 'circulant <n> <j|none>'", lineno);
                if (jump != "none") {
                    try {
                        std::size_t used = 0;
                        spec.reversed_jump = std::stoi(jump, &used);
                        if (used != jump.size()) throw std::invalid_argument(jump);
                    } catch (const std::exception&) {
                        throw parse_error("reversed jump must be an integer or 'none'", lineno);
                    }
                }
                try {
                    validate(spec);
                } catch (const invalid_spec_error& e) {
                    throw parse_error(e.what(), lineno);
                }
                circulant = true;
            } else {
                throw parse_error("expected a 'digraph' or 'circulant' header", lineno);
            }
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens after header", lineno);
            continue;
        }
        if (circulant) continue;

        long long u = 0, v = 0;
        std::istringstream as(line);
        std::string extra;
        if (!(as >> u >> v) || (as >> extra)) throw parse_error("expected 'u v'", lineno);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
            throw parse_error("arc endpoint out of range", lineno);
        if (u == v) throw parse_error("loop at vertex " + std::to_string(u), lineno);
        arcs.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
        arc_lines.push_back(lineno);
    }
    if (circulant) return circulant_tournament(spec);
    if (!n) throw parse_error("empty digraph file");

    std::vector<arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        auto where = std::find(arcs.begin(), arcs.end(), *dup);
        auto second = std::find(where + 1, arcs.end(), *dup);
        throw parse_error("duplicate arc " + std::to_string(dup->first) + " " + std::to_string(dup->second),
                          arc_lines[static_cast<std::size_t>(second - arcs.begin())]);
    }
    return digraph(*n, arcs);
}

inline digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

/// Serializes the explicit arc list; circulant inputs may instead be written
/// as their one-line spec.
inline std::string format_digraph(const digraph& d, bool spec_line_if_circulant = false) {
    std::ostringstream out;
    if (spec_line_if_circulant && d.provenance()) {
        const auto& s = *d.provenance();
        out << "circulant " << s.half_order << ' '
            << (s.reversed_jump ? std::to_string(*s.reversed_jump) : std::string("none")) << '\n';
        return out.str();
    }
    out << "digraph " << d.num_vertices() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace dicolor
