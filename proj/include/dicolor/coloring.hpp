#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

using color = std::uint8_t;

inline constexpr unsigned max_palette = 255;

/// Total map vertex -> {1..k}. Classes may be empty; validity against a
/// digraph is a separate question (is_valid).
class coloring {
   public:
    coloring() = default;

    coloring(std::vector<color> colors, unsigned palette) : colors_(std::move(colors)), palette_(palette) {
        if (palette_ < 1 || palette_ > max_palette) throw precondition_error("palette size must be in 1..255");
        for (color c : colors_)
            if (c < 1 || c > palette_)
                throw precondition_error("color " + std::to_string(c) + " outside 1.." + std::to_string(palette_));
    }

    std::size_t size() const { return colors_.size(); }
    unsigned palette() const { return palette_; }
    color operator[](vertex v) const { return colors_[v]; }
    std::span<const color> colors() const { return colors_; }

    vertex_mask class_mask(color c) const {
        vertex_mask m = 0;
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] == c) m |= bit(static_cast<vertex>(v));
        return m;
    }

    std::vector<vertex> color_class(color c) const {
        std::vector<vertex> out;
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] == c) out.push_back(static_cast<vertex>(v));
        return out;
    }

    /// The same coloring with vertex v recolored to c.
    coloring with(vertex v, color c) const {
        coloring out = *this;
        out.colors_.at(v) = c;
        return out;
    }

    void set(vertex v, color c) { colors_.at(v) = c; }

    friend bool operator==(const coloring&, const coloring&) = default;
    friend auto operator<=>(const coloring&, const coloring&) = default;

   private:
    std::vector<color> colors_;
    unsigned palette_ = 1;
};

/// Comparison from the highest vertex down; this is the order of packed keys.
inline bool colex_less(const coloring& a, const coloring& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[static_cast<vertex>(i)] != b[static_cast<vertex>(i)])
            return a[static_cast<vertex>(i)] < b[static_cast<vertex>(i)];
    return false;
}

// ---------------------------------------------------------------------------
// Packed keys: sum over v of (colors[v]-1) * k^v.

using coloring_key = std::uint64_t;

__extension__ using wide_count = unsigned __int128;

inline bool key_fits(std::size_t num_vertices, unsigned palette) {
    wide_count total = 1;
    for (std::size_t i = 0; i < num_vertices; ++i) {
        total *= palette;
        if (total > (static_cast<wide_count>(1) << 64)) return false;
    }
    return true;
}

/// k^v for v = 0..n-1.
inline std::vector<coloring_key> key_powers(std::size_t num_vertices, unsigned palette) {
    if (!key_fits(num_vertices, palette))
        throw capacity_error("k^n exceeds 2^64; colorings cannot be packed into keys", num_vertices);
    std::vector<coloring_key> p(num_vertices);
    coloring_key x = 1;
    for (std::size_t v = 0; v < num_vertices; ++v) {
        p[v] = x;
        if (v + 1 < num_vertices) x *= palette;
    }
    return p;
}

inline coloring_key pack(const coloring& c) {
    if (!key_fits(c.size(), c.palette()))
        throw capacity_error("k^n exceeds 2^64; colorings cannot be packed into keys", c.size());
    coloring_key key = 0;
    for (std::size_t i = c.size(); i-- > 0;) key = key * c.palette() + (c[static_cast<vertex>(i)] - 1U);
    return key;
}

inline coloring unpack(coloring_key key, std::size_t num_vertices, unsigned palette) {
    if (!key_fits(num_vertices, palette))
        throw capacity_error("k^n exceeds 2^64; colorings cannot be packed into keys", num_vertices);
    std::vector<color> cs(num_vertices);
    for (auto& c : cs) {
        c = static_cast<color>(key % palette + 1);
        key /= palette;
    }
    if (key != 0) throw precondition_error("key out of range for n and k");
    return coloring(std::move(cs), palette);
}

// ---------------------------------------------------------------------------
// Validity

inline void check_length(const digraph& d, const coloring& c) {
    if (c.size() != d.num_vertices())
        throw precondition_error("coloring has " + std::to_string(c.size()) + " entries but the digraph has " +
                                 std::to_string(d.num_vertices()) + " vertices");
}

inline bool is_valid(const digraph& d, const coloring& c) {
    check_length(d, c);
    for (unsigned col = 1; col <= c.palette(); ++col) {
        const auto cls = static_cast<color>(col);
        if (d.uses_masks() ? !is_acyclic_mask(d, c.class_mask(cls)) : !is_acyclic_subset(d, c.color_class(cls)))
            return false;
    }
    return true;
}

/// The first color class containing a directed cycle, with the cycle as a
/// certificate.
struct cyclic_class {
    color class_color;
    std::vector<vertex> members;
    std::vector<vertex> cycle;
};

inline std::optional<cyclic_class> find_cyclic_class(const digraph& d, const coloring& c) {
    check_length(d, c);
    for (unsigned col = 1; col <= c.palette(); ++col) {
        auto members = c.color_class(static_cast<color>(col));
        if (auto cycle = find_cycle(d, members); !cycle.empty())
            return cyclic_class{static_cast<color>(col), std::move(members), std::move(cycle)};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration

/// Lazily yields every acyclic k-coloring exactly once, in increasing packed
/// key order (vertices are assigned from n-1 down to 0). Each class is kept
/// acyclic incrementally: a vertex may join a class unless it would close a
/// cycle through it.
class backtrack_enumerator {
   public:
    backtrack_enumerator(const digraph& d, unsigned k, std::optional<color> vertex0_color = std::nullopt)
        : d_(&d), k_(k), fixed0_(vertex0_color), n_(d.num_vertices()), chosen_(n_, 0), classes_(k, 0) {
        if (k < 1 || k > max_palette) throw precondition_error("palette size must be in 1..255");
        if (!d.uses_masks()) throw capacity_error("coloring enumeration supports at most 64 vertices", n_);
        if (fixed0_ && (*fixed0_ < 1 || *fixed0_ > k)) throw precondition_error("vertex-0 color outside palette");
    }

    std::optional<coloring> next() {
        if (done_) return std::nullopt;
        std::size_t depth = 0;
        if (started_) {
            depth = n_ - 1;  // resume after the last yielded leaf
        }
        started_ = true;
        for (;;) {
            const auto v = static_cast<vertex>(n_ - 1 - depth);
            color& cur = chosen_[depth];
            if (cur) classes_[cur - 1] &= ~bit(v);

            unsigned lo = cur + 1U, hi = k_;
            if (v == 0 && fixed0_) {
                lo = std::max<unsigned>(lo, *fixed0_);
                hi = *fixed0_;
            }
            color found = 0;
            for (unsigned c = lo; c <= hi; ++c) {
                if (!detail::closes_cycle(*d_, classes_[c - 1], v)) {
                    found = static_cast<color>(c);
                    break;
                }
            }
            if (found) {
                cur = found;
                classes_[found - 1] |= bit(v);
                if (depth + 1 == n_) return current();
                chosen_[++depth] = 0;
            } else {
                cur = 0;
                if (depth == 0) {
                    done_ = true;
                    return std::nullopt;
                }
                --depth;
            }
        }
    }

   private:
    coloring current() const {
        std::vector<color> cs(n_);
        for (std::size_t depth = 0; depth < n_; ++depth) cs[n_ - 1 - depth] = chosen_[depth];
        return coloring(std::move(cs), k_);
    }

    const digraph* d_;
    unsigned k_;
    std::optional<color> fixed0_;
    std::size_t n_;
    std::vector<color> chosen_;  // indexed by depth
    std::vector<vertex_mask> classes_;
    bool started_ = false;
    bool done_ = false;
};

template <class Fn>
void for_each_coloring(const digraph& d, unsigned k, Fn&& fn) {
    backtrack_enumerator it(d, k);
    while (auto c = it.next()) fn(*c);
}

inline std::vector<coloring> enumerate_backtrack(const digraph& d, unsigned k) {
    std::vector<coloring> out;
    for_each_coloring(d, k, [&](const coloring& c) { out.push_back(c); });
    return out;
}

/// Splits the search by the color of vertex 0 and collects the parts on up
/// to `threads` threads; the merged result is in packed-key order.
inline std::vector<coloring> enumerate_backtrack_parallel(const digraph& d, unsigned k, unsigned threads) {
    threads = std::max(1U, std::min(threads, k));
    std::vector<std::vector<coloring>> parts(k);
    auto work = [&](unsigned first) {
        for (unsigned c = first; c < k; c += threads) {
            backtrack_enumerator it(d, k, static_cast<color>(c + 1));
            while (auto col = it.next()) parts[c].push_back(std::move(*col));
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
        work(0);
    }
    std::vector<coloring> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration through ordered partitions into acyclic cells

inline constexpr std::size_t max_partition_vertices = 24;

/// Every nonempty acyclic vertex subset, as masks in increasing order. For
/// a circulant tournament the list is generated from the subsets whose
/// source is 0 (0 plus part of its out-neighborhood) and closed under
/// rotation; otherwise all subsets are filtered directly.
inline std::vector<vertex_mask> acyclic_subsets(const digraph& d) {
    const std::size_t n = d.num_vertices();
    if (n > max_partition_vertices) throw capacity_error("acyclic subset listing supports at most 24 vertices", n);
    std::vector<vertex_mask> out;
    if (d.is_circulant()) {
        const vertex_mask outs = d.out_mask(0);
        std::vector<vertex_mask> rooted;
        for (vertex_mask t = outs;; t = (t - 1) & outs) {
            if (is_acyclic_mask(d, t | 1U)) rooted.push_back(t | 1U);
            if (t == 0) break;
        }
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (vertex_mask s : rooted) {
                vertex_mask r = 0;
                for (vertex v : from_mask(s)) r |= bit(zmod(static_cast<long long>(v) + shift, n));
                out.push_back(r);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    const vertex_mask all = d.all_mask();
    for (vertex_mask s = 1; s <= all; ++s)
        if (is_acyclic_mask(d, s)) out.push_back(s);
    return out;
}

/// Calls fn(coloring) once per ordered k-tuple of pairwise disjoint cells
/// covering V, each cell acyclic or empty.
template <class Fn>
void for_each_partition_coloring(const digraph& d, unsigned k, Fn&& fn) {
    if (k < 1 || k > max_palette) throw precondition_error("palette size must be in 1..255");
    const std::size_t n = d.num_vertices();
    const std::vector<vertex_mask> cells = acyclic_subsets(d);
    std::vector<char> is_cell(std::size_t{1} << n, 0);
    is_cell[0] = 1;
    for (vertex_mask s : cells) is_cell[s] = 1;

    std::vector<vertex_mask> chosen(k, 0);
    std::vector<color> cs(n);
    auto emit = [&] {
        for (unsigned i = 0; i < k; ++i)
            for (vertex v : from_mask(chosen[i])) cs[v] = static_cast<color>(i + 1);
        fn(coloring(cs, k));
    };
    auto rec = [&](auto&& self, unsigned i, vertex_mask rest) -> void {
        if (i + 1 == k) {
            if (!is_cell[rest]) return;
            chosen[i] = rest;
            emit();
            return;
        }
        for (vertex_mask sub = rest;; sub = (sub - 1) & rest) {
            if (is_cell[sub]) {
                chosen[i] = sub;
                self(self, i + 1, rest & ~sub);
            }
            if (sub == 0) break;
        }
    };
    rec(rec, 0, d.all_mask());
}

inline std::vector<coloring> enumerate_by_partitions(const digraph& d, unsigned k) {
    std::vector<coloring> out;
    for_each_partition_coloring(d, k, [&](const coloring& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------------------
// Symmetries

/// colors[v] := perm[colors[v] - 1]; perm must be a bijection on 1..k.
inline coloring permute_colors(const coloring& c, std::span<const color> perm) {
    if (perm.size() != c.palette())
        throw precondition_error("permutation has " + std::to_string(perm.size()) + " entries, palette is " +
                                 std::to_string(c.palette()));
    std::vector<char> seen(c.palette() + 1U, 0);
    for (color p : perm) {
        if (p < 1 || p > c.palette() || seen[p]) throw precondition_error("color map is not a bijection on 1..k");
        seen[p] = 1;
    }
    std::vector<color> cs(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) cs[v] = perm[c[static_cast<vertex>(v)] - 1U];
    return coloring(std::move(cs), c.palette());
}

/// result(i + shift) = c(i) over Z_{2n+1}.
inline coloring rotate(const coloring& c, const circulant_spec& spec, long long shift) {
    validate(spec);
    const auto m = static_cast<long long>(spec.order());
    if (c.size() != static_cast<std::size_t>(m)) throw precondition_error("coloring length does not match circulant order");
    std::vector<color> cs(c.size());
    for (long long i = 0; i < m; ++i) cs[zmod(i + shift, m)] = c[static_cast<vertex>(i)];
    return coloring(std::move(cs), c.palette());
}

inline coloring rotate(const coloring& c, const digraph& d, long long shift) {
    if (!d.provenance()) throw precondition_error("rotation requires a circulant digraph");
    return rotate(c, *d.provenance(), shift);
}

// ---------------------------------------------------------------------------
// Text format: comma-separated 1-based colors in vertex order.

inline std::string format_coloring(const coloring& c) {
    std::string s;
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (v) s += ',';
        s += std::to_string(c[static_cast<vertex>(v)]);
    }
    return s;
}

/// Parses "1,1,2,...". With palette 0 the palette is the largest color seen.
inline coloring parse_coloring(const std::string& text, unsigned palette = 0) {
    std::vector<color> cs;
    std::stringstream in(text);
    std::string tok;
    unsigned top = 0;
    while (std::getline(in, tok, ',')) {
        const auto first = tok.find_first_not_of(" \t");
        const auto last = tok.find_last_not_of(" \t\r\n");
        if (first == std::string::npos) throw parse_error("empty entry in coloring '" + text + "'");
        tok = tok.substr(first, last - first + 1);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || value < 1 || value > static_cast<long>(max_palette))
            throw parse_error("bad color '" + tok + "' in coloring '" + text + "'");
        cs.push_back(static_cast<color>(value));
        top = std::max(top, static_cast<unsigned>(value));
    }
    if (cs.empty()) throw parse_error("empty coloring");
    if (palette == 0) palette = top;
    if (top > palette)
        throw parse_error("color " + std::to_string(top) + " exceeds palette size " + std::to_string(palette));
    return coloring(std::move(cs), palette);
}

}  // namespace dicolor
