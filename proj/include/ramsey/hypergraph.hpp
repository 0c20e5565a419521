#pragma once

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/limits.hpp"
#include "ramsey/set_order.hpp"

namespace ramsey {

/// A b-uniform hypergraph on the ordered vertex set {1..n}.  Edges are
/// b-element subsets, stored sorted with the family in lex order.  b = 1 is
/// rejected: singleton edges carry no structure the vertex order lacks.
class Hypergraph {
public:
    Hypergraph(int n, int b, std::vector<IntSet> edges) : n_(n), b_(b) {
        if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count", n);
        if (b < 2) throw Error(Errc::InvalidArgument, "edge size must be at least 2", b);
        for (IntSet& e : edges) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != b)
                throw Error(Errc::ArityMismatch, "edge size differs from uniformity",
                            static_cast<long>(e.size()), b);
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw Error(Errc::InvalidArgument, "edge with repeated vertex");
            if (e.front() < 1 || e.back() > n)
                throw Error(Errc::InvalidArgument, "edge leaves vertex universe");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw Error(Errc::InvalidArgument, "duplicate edge");
        edges_ = std::move(edges);
    }

    int size() const { return n_; }
    int edge_size() const { return b_; }
    const std::vector<IntSet>& edges() const { return edges_; }

    bool has_edge(IntSet e) const {
        std::sort(e.begin(), e.end());
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// Induced subhypergraph on S (a subset of {1..n}), vertices renumbered
    /// along the increasing bijection S -> {1..|S|}.
    Hypergraph induced(const IntSet& s) const {
        std::vector<int> rank(n_ + 1, 0);
        int next = 0;
        for (int v : s) {
            if (v < 1 || v > n_) throw Error(Errc::InvalidArgument, "vertex outside universe", v);
            if (rank[v]) throw Error(Errc::InvalidArgument, "repeated vertex in selection", v);
            rank[v] = ++next;
        }
        std::vector<IntSet> kept;
        for (const IntSet& e : edges_) {
            IntSet image;
            for (int v : e) {
                if (!rank[v]) break;
                image.push_back(rank[v]);
            }
            if (static_cast<int>(image.size()) == b_) {
                std::sort(image.begin(), image.end());
                kept.push_back(std::move(image));
            }
        }
        return Hypergraph(next, b_, std::move(kept));
    }

    std::string key() const {
        std::ostringstream out;
        out << 'H' << n_ << '/' << b_;
        for (const IntSet& e : edges_) {
            out << ';';
            for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
        }
        return out.str();
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int b_;
    std::vector<IntSet> edges_;
};

/// The downsets of a hypergraph: every singleton {v} plus every subset of
/// size >= 2 of an edge, each listed once, in increasing Alex order.
inline std::vector<IntSet> downsets(const Hypergraph& h) {
    std::vector<IntSet> family;
    for (int v = 1; v <= h.size(); ++v) family.push_back({v});
    for (const IntSet& e : h.edges()) {
        const int b = static_cast<int>(e.size());
        for (unsigned mask = 1; mask < (1u << b); ++mask) {
            if (std::popcount(mask) < 2) continue;
            IntSet sub;
            for (int i = 0; i < b; ++i)
                if (mask & (1u << i)) sub.push_back(e[i]);
            family.push_back(std::move(sub));
        }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::sort(family.begin(), family.end(), [&](const IntSet& a, const IntSet& b) {
        return set_less(h.size(), a, b, SetOrder::Alex);
    });
    return family;
}

/// The Graham-Rothschild target G(n) for edge size b: vertices are the
/// subsets of {1..n} in increasing CoLex order, and every b-element set of
/// distinct subsets with a common element is an edge.
struct GrTarget {
    Hypergraph graph;
    std::vector<IntSet> vertex_set;  // vertex v (1-based) carries this subset
    int ground_n = 0;

    /// 1-based CoLex rank of a subset of {1..n}.
    int vertex_of(const IntSet& s) const {
        auto it = std::find(vertex_set.begin(), vertex_set.end(), s);
        if (it == vertex_set.end())
            throw Error(Errc::InvalidArgument, "subset is not a target vertex");
        return static_cast<int>(it - vertex_set.begin()) + 1;
    }
};

inline GrTarget gr_target_hypergraph(int n, int b, const Limits& limits = {}) {
    if (n < 1) throw Error(Errc::InvalidArgument, "ground set must be nonempty", n);
    if (b < 2) throw Error(Errc::InvalidArgument, "edge size must be at least 2", b);
    if (n >= 26 || (std::uint64_t{1} << n) > limits.node_cap)
        throw Error(Errc::SizeLimitExceeded, "target vertex count exceeds cap", n);
    std::vector<IntSet> verts = sorted_power_set(n, SetOrder::CoLex, limits.node_cap);
    const int count = static_cast<int>(verts.size());

    // Enumerate b-element sets of vertices whose subsets intersect; the
    // running intersection prunes, and the empty subset never joins an edge.
    std::vector<IntSet> edges;
    std::uint64_t visited = 0;
    std::vector<int> chosen;
    auto extend = [&](auto&& self, int from, const IntSet& common) -> void {
        if (static_cast<int>(chosen.size()) == b) {
            IntSet edge(chosen.begin(), chosen.end());
            std::sort(edge.begin(), edge.end());
            edges.push_back(std::move(edge));
            return;
        }
        for (int v = from; v <= count; ++v) {
            if (++visited > limits.node_cap)
                throw Error(Errc::SizeLimitExceeded, "target edge enumeration exceeds cap");
            IntSet next;
            std::set_intersection(common.begin(), common.end(), verts[v - 1].begin(),
                                  verts[v - 1].end(), std::back_inserter(next));
            if (next.empty()) continue;
            chosen.push_back(v);
            self(self, v + 1, next);
            chosen.pop_back();
        }
    };
    IntSet all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    extend(extend, 1, all);

    return GrTarget{Hypergraph(count, b, std::move(edges)), std::move(verts), n};
}

}  // namespace ramsey
