#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

struct recolor_move {
    vertex v;
    color to;

    friend bool operator==(const recolor_move&, const recolor_move&) = default;
};

/// A start coloring and a list of single-vertex recolorings.
struct recoloring_walk {
    coloring start;
    std::vector<recolor_move> moves;

    std::size_t length() const { return moves.size(); }

    /// Coloring after applying every move (no validity check).
    coloring end() const {
        coloring c = start;
        for (const auto& m : moves) c.set(m.v, m.to);
        return c;
    }
};

struct walk_verdict {
    bool ok = true;
    std::optional<std::size_t> first_invalid_step;  // index into moves; absent if the start is the problem
    std::string reason;

    static walk_verdict valid() { return {}; }
};

/// Replays the moves, checking after each one that the state is an acyclic
/// coloring and that the move actually changed a color.
inline walk_verdict validate_walk(const digraph& d, const recoloring_walk& w) {
    if (w.start.size() != d.num_vertices()) return {false, std::nullopt, "start coloring has the wrong length"};
    if (!is_valid(d, w.start)) return {false, std::nullopt, "start coloring is not acyclic"};
    coloring cur = w.start;
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        const auto& m = w.moves[i];
        if (m.v >= d.num_vertices()) return {false, i, "vertex out of range"};
        if (m.to < 1 || m.to > cur.palette()) return {false, i, "color outside palette"};
        if (cur[m.v] == m.to) return {false, i, "move keeps the current color"};
        cur.set(m.v, m.to);
        if (!is_valid(d, cur)) return {false, i, "color class " + std::to_string(m.to) + " becomes cyclic"};
    }
    return walk_verdict::valid();
}

namespace detail {

struct walk_builder {
    recoloring_walk walk;
    coloring cur;

    explicit walk_builder(const coloring& start) : walk{start, {}}, cur(start) {}

    void recolor(vertex v, color c) {
        if (cur[v] == c) return;
        walk.moves.push_back({v, c});
        cur.set(v, c);
    }
};

inline void require(bool cond, const std::string& clause) {
    if (!cond) throw precondition_error(clause);
}

/// Shared tail of both lemma builders: b's classes for `colors` are
/// singletons, cur agrees with b outside them. Recolors into an empty class
/// while one exists; otherwise every class is a singleton and the displaced
/// vertices are chased one permutation cycle at a time, starting from the
/// lowest displaced vertex.
inline void finish_singletons(walk_builder& wb, const coloring& target, std::vector<color> colors) {
    auto owner_in = [&](const coloring& c, color col) -> std::optional<vertex> {
        for (std::size_t v = 0; v < c.size(); ++v)
            if (c[static_cast<vertex>(v)] == col) return static_cast<vertex>(v);
        return std::nullopt;
    };
    while (!colors.empty()) {
        // Classes already in place need no work.
        std::erase_if(colors, [&](color col) { return wb.cur.class_mask(col) == target.class_mask(col); });
        if (colors.empty()) break;

        auto empty = std::find_if(colors.begin(), colors.end(), [&](color col) { return !owner_in(wb.cur, col); });
        if (empty != colors.end()) {
            wb.recolor(*owner_in(target, *empty), *empty);
            colors.erase(empty);
            continue;
        }

        vertex start = static_cast<vertex>(wb.cur.size());
        for (color col : colors) {
            const vertex u = *owner_in(wb.cur, col);
            if (wb.cur[u] != target[u]) start = std::min(start, u);
        }
        // Chase: move u to its target class, then the vertex that was there.
        vertex u = start;
        for (;;) {
            const color dest = target[u];
            const auto displaced = owner_in(wb.cur, dest);
            wb.recolor(u, dest);
            if (!displaced || *displaced == u || wb.cur[*displaced] == target[*displaced]) break;
            u = *displaced;
            if (u == start) break;
        }
    }
}

inline std::vector<vertex> union_of_classes(const coloring& c, std::span<const color> colors) {
    std::vector<vertex> out;
    for (color col : colors)
        for (vertex v : c.color_class(col)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_no_digon_within(const digraph& d, std::span<const vertex> vs) {
    for (vertex u : vs)
        for (vertex v : vs)
            if (u < v && d.has_arc(u, v) && d.has_arc(v, u))
                throw precondition_error("digraph has a digon between vertices " + std::to_string(u) + " and " +
                                         std::to_string(v));
}

inline void require_common_setup(const digraph& d, const coloring& a, const coloring& b) {
    require(a.size() == d.num_vertices() && b.size() == d.num_vertices(), "coloring length must match the digraph");
    require(a.palette() == b.palette(), "both colorings must use the same palette");
    require(is_valid(d, a), "start coloring must be acyclic");
    require(is_valid(d, b), "target coloring must be acyclic");
}

inline void require_agree_outside(const coloring& a, const coloring& b, std::span<const vertex> region) {
    for (std::size_t v = 0; v < a.size(); ++v) {
        const auto vx = static_cast<vertex>(v);
        if (!std::binary_search(region.begin(), region.end(), vx) && a[vx] != b[vx])
            throw precondition_error("start and target differ at vertex " + std::to_string(v) +
                                     ", outside the target's designated classes");
    }
}

}  // namespace detail

/// Walk from a to b when b's classes listed in `classes` are singletons and
/// a agrees with b everywhere else. Length <= |classes|.
inline recoloring_walk walk_singleton_classes(const digraph& d, const coloring& a, const coloring& b,
                                              std::span<const color> classes) {
    using detail::require;
    detail::require_common_setup(d, a, b);
    if (a == b) return {a, {}};
    std::vector<color> cs(classes.begin(), classes.end());
    std::sort(cs.begin(), cs.end());
    require(std::adjacent_find(cs.begin(), cs.end()) == cs.end(), "designated classes must be distinct colors");
    require(cs.size() >= 2, "at least two designated classes are required");
    require(cs.size() <= a.palette() && cs.size() <= d.num_vertices(),
            "number of designated classes exceeds the palette or the order");
    for (color c : cs) {
        require(c >= 1 && c <= a.palette(), "designated class color outside palette");
        require(b.color_class(c).size() == 1, "target class " + std::to_string(c) + " must be a singleton");
    }
    const auto region = detail::union_of_classes(b, cs);
    detail::require_agree_outside(a, b, region);
    detail::require_no_digon_within(d, region);

    detail::walk_builder wb(a);
    detail::finish_singletons(wb, b, cs);
    return wb.walk;
}

/// Walk from a to b when b has one two-vertex class `pair_class`, the
/// classes in `singleton_classes` are singletons, and a agrees with b
/// elsewhere. Length <= |singleton_classes| + 2.
inline recoloring_walk walk_singletons_plus_pair(const digraph& d, const coloring& a, const coloring& b,
                                                 color pair_class, std::span<const color> singleton_classes) {
    using detail::require;
    detail::require_common_setup(d, a, b);
    if (a == b) return {a, {}};
    std::vector<color> singles(singleton_classes.begin(), singleton_classes.end());
    std::sort(singles.begin(), singles.end());
    require(std::adjacent_find(singles.begin(), singles.end()) == singles.end(),
            "singleton classes must be distinct colors");
    require(!singles.empty(), "at least one singleton class is required");
    require(std::find(singles.begin(), singles.end(), pair_class) == singles.end(),
            "pair class must not be listed as a singleton class");
    require(singles.size() + 1 <= a.palette() && singles.size() + 2 <= d.num_vertices(),
            "number of designated classes exceeds the palette or the order");
    require(pair_class >= 1 && pair_class <= a.palette(), "pair class color outside palette");
    const auto pair = b.color_class(pair_class);
    require(pair.size() == 2, "target class " + std::to_string(pair_class) + " must have exactly two vertices");
    for (color c : singles) {
        require(c >= 1 && c <= a.palette(), "singleton class color outside palette");
        require(b.color_class(c).size() == 1, "target class " + std::to_string(c) + " must be a singleton");
    }
    std::vector<color> all = singles;
    all.push_back(pair_class);
    const auto region = detail::union_of_classes(b, all);
    detail::require_agree_outside(a, b, region);
    detail::require_no_digon_within(d, region);

    detail::walk_builder wb(a);
    auto pair_done = [&] { return wb.cur.class_mask(pair_class) == b.class_mask(pair_class); };
    for (;;) {
        if (wb.cur == b) break;
        if (wb.cur.color_class(pair_class).empty()) {
            wb.recolor(pair[0], pair_class);
            wb.recolor(pair[1], pair_class);
            detail::finish_singletons(wb, b, singles);
            break;
        }
        auto empty = std::find_if(singles.begin(), singles.end(),
                                  [&](color c) { return wb.cur.color_class(c).empty(); });
        if (empty != singles.end()) {
            wb.recolor(b.color_class(*empty)[0], *empty);
            singles.erase(empty);
            if (singles.empty()) {
                // Only the pair remains; its class is nonempty and inside the pair.
                wb.recolor(pair[0], pair_class);
                wb.recolor(pair[1], pair_class);
                break;
            }
            continue;
        }
        // Every designated class is nonempty inside the region: one holds two
        // vertices, the rest one each.
        if (pair_done()) {
            detail::finish_singletons(wb, b, singles);
            break;
        }
        color doubled = 0;
        for (color c : all)
            if (wb.cur.color_class(c).size() == 2) doubled = c;
        std::optional<vertex> mover;
        if (doubled) {
            for (vertex v : wb.cur.color_class(doubled))
                if (wb.cur[v] != b[v]) {
                    mover = v;
                    break;
                }
        } else {
            // Every class is a singleton, so one region vertex carries a
            // color from outside; it joins its target class as a pair.
            for (vertex v : region)
                if (std::find(all.begin(), all.end(), wb.cur[v]) == all.end()) {
                    mover = v;
                    break;
                }
        }
        if (!mover) throw std::logic_error("pair walk: no vertex to move in the saturated case");
        wb.recolor(*mover, b[*mover]);
    }
    return wb.walk;
}

namespace detail {

inline void require_last_jump_family(const digraph& d) {
    require(d.provenance() && d.provenance()->is_last_jump_reversed(), "digraph must be a C_{2n+1}<n> tournament");
}

}  // namespace detail

/// Walk ending in a coloring whose class j is an interval {a..a+n-1} of
/// C_{2n+1}<n>. Length <= n - |C_j| when |C_j| <= 1, else <= n + 2 - |C_j|.
inline recoloring_walk extend_class_to_interval(const digraph& d, const coloring& start, color j) {
    using detail::require;
    detail::require_last_jump_family(d);
    const circulant_spec spec = *d.provenance();
    const int n = spec.half_order;
    const int m = spec.order();
    require(n >= 4, "the interval extension needs n >= 4");
    require(start.size() == d.num_vertices(), "coloring length must match the digraph");
    require(start.palette() >= 3, "the interval extension needs at least 3 colors");
    require(j >= 1 && j <= start.palette(), "class color outside palette");
    require(is_valid(d, start), "start coloring must be acyclic");
    const std::vector<vertex> cls = start.color_class(j);
    require(!is_forbidden_triangle(spec, cls), "class " + std::to_string(j) + " must not be a forbidden triangle");

    auto at = [&](long long x) { return zmod(x, m); };
    detail::walk_builder wb(start);
    auto fill_interval = [&](long long from, long long to) {  // inclusive, in order
        for (long long x = from; x <= to; ++x) wb.recolor(at(x), j);
    };

    // Class with a source s; all of it lies in {s} + N+(s) = {s..s+n+1} \ {s+n}.
    auto from_source = [&](const std::vector<vertex>& members) {
        vertex s = members.front();
        for (vertex v : members) {
            bool source = true;
            for (vertex w : members)
                if (d.has_arc(w, v)) source = false;
            if (source) s = v;
        }
        const bool far_end = std::find(members.begin(), members.end(), at(s + n + 1)) != members.end();
        if (!far_end) {
            fill_interval(s, s + n - 1);
            return;
        }
        fill_interval(s + 2, s + n - 1);
        const color l = wb.cur[at(s + 1)];
        const color other = wb.cur[at(s + n)];
        color h = 0;
        if (wb.cur.palette() >= 4) {
            for (unsigned c = 1; c <= wb.cur.palette() && !h; ++c)
                if (c != j && c != l && c != other) h = static_cast<color>(c);
        } else {
            // Three colors: h is the one besides j and l.
            for (unsigned c = 1; c <= 3 && !h; ++c)
                if (c != j && c != l) h = static_cast<color>(c);
        }
        wb.recolor(at(s + n + 1), h);
        wb.recolor(at(s + 1), j);
    };

    if (cls.size() >= 3) {
        from_source(cls);
    } else if (cls.size() <= 1) {
        const long long a = cls.empty() ? 0 : cls.front();
        fill_interval(a, a + n - 1);
    } else {
        const vertex u = cls[0], w = cls[1];
        std::optional<long long> anchor;
        for (long long a = 0; a < m && !anchor; ++a) {
            auto inside = [&](vertex x) { return zmod(static_cast<long long>(x) - a, m) < static_cast<vertex>(n); };
            if (inside(u) && inside(w)) anchor = a;
        }
        if (anchor) {
            fill_interval(*anchor, *anchor + n - 1);
        } else {
            // Antipodal pair {a, a+n}: add a+n+2 first, then treat the triple.
            const long long a = (at(u + n) == w) ? u : w;
            wb.recolor(at(a + n + 2), j);
            from_source(wb.cur.color_class(j));
        }
    }
    return wb.walk;
}

/// The frozen coloring of C_{6n'+3}<3n'+1> with 2n'+1 colors whose classes
/// are the forbidden triangles {3m, 3n'+1+3m, 3n'+2+3m} (odd colors 2m+1)
/// and {3m-2, 3m-1, 3n'+3m} (even colors 2m), rotated by `rotation` places
/// and then recolored through `perm` (identity if empty).
inline coloring frozen_coloring(int n_prime, int rotation, std::span<const color> perm = {}) {
    if (n_prime < 1) throw precondition_error("frozen colorings need n' >= 1");
    if (rotation < 0 || rotation > 2) throw precondition_error("rotation must be 0, 1 or 2");
    const int m = 6 * n_prime + 3;
    const int k = 2 * n_prime + 1;
    std::vector<color> cs(static_cast<std::size_t>(m), 0);
    for (int mm = 0; mm <= n_prime; ++mm)
        for (int v : {3 * mm, 3 * n_prime + 1 + 3 * mm, 3 * n_prime + 2 + 3 * mm}) cs[zmod(v, m)] = static_cast<color>(2 * mm + 1);
    for (int mm = 1; mm <= n_prime; ++mm)
        for (int v : {3 * mm - 2, 3 * mm - 1, 3 * n_prime + 3 * mm}) cs[zmod(v, m)] = static_cast<color>(2 * mm);
    coloring out(std::move(cs), static_cast<unsigned>(k));
    const circulant_spec spec{3 * n_prime + 1, 3 * n_prime + 1};
    out = rotate(out, spec, rotation);
    if (!perm.empty()) out = permute_colors(out, perm);
    return out;
}

/// Member of the family with classes {a}, {a+1..a+n}, {a+n+1..a+2n}.
struct c_family_member {
    int anchor = 0;
    std::array<color, 3> class_colors{1, 2, 3};  // singleton, first half, second half
};

inline coloring c_family(const circulant_spec& spec, const c_family_member& member) {
    validate(spec);
    if (!spec.is_last_jump_reversed()) throw precondition_error("c_family needs the C_{2n+1}<n> family");
    if (spec.half_order < 3) throw precondition_error("c_family needs n >= 3");
    const auto& cc = member.class_colors;
    for (color c : cc)
        if (c < 1 || c > 3) throw precondition_error("c_family colors must be in 1..3");
    if (cc[0] == cc[1] || cc[0] == cc[2] || cc[1] == cc[2]) throw precondition_error("c_family colors must be distinct");
    const int n = spec.half_order;
    const int m = spec.order();
    std::vector<color> cs(static_cast<std::size_t>(m));
    cs[zmod(member.anchor, m)] = cc[0];
    for (int i = 1; i <= n; ++i) cs[zmod(member.anchor + i, m)] = cc[1];
    for (int i = n + 1; i <= 2 * n; ++i) cs[zmod(member.anchor + i, m)] = cc[2];
    return coloring(std::move(cs), 3);
}

/// All (2n+1) * 3! members, anchors ascending then color permutations in
/// lexicographic order.
inline std::vector<c_family_member> c_family_members(const circulant_spec& spec) {
    std::vector<c_family_member> out;
    std::array<color, 3> p{1, 2, 3};
    for (int a = 0; a < spec.order(); ++a) {
        p = {1, 2, 3};
        do out.push_back({a, p});
        while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format: start coloring line, then one "v -> c" line per move.

inline std::string format_walk(const recoloring_walk& w) {
    std::ostringstream out;
    out << format_coloring(w.start) << '\n';
    for (const auto& m : w.moves) out << m.v << " -> " << static_cast<unsigned>(m.to) << '\n';
    return out.str();
}

inline recoloring_walk parse_walk(const std::string& text, unsigned palette = 0) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<coloring> start;
    std::vector<recolor_move> moves;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!start) {
            start = parse_coloring(line, palette);
            continue;
        }
        std::istringstream ls(line);
        long long v = -1, c = -1;
        std::string arrow, extra;
        if (!(ls >> v >> arrow >> c) || arrow != "->" || (ls >> extra) || v < 0 || c < 1 ||
            c > static_cast<long long>(start->palette()))
            throw parse_error("expected 'v -> c'", lineno);
        moves.push_back({static_cast<vertex>(v), static_cast<color>(c)});
    }
    if (!start) throw parse_error("walk has no start coloring");
    return {*start, std::move(moves)};
}

}  // namespace dicolor
