#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/limits.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

/// An embedding of linearly ordered structures, represented by its value
/// table: map[i-1] is the image of domain element i.  Order preservation
/// plus injectivity force the table to be strictly increasing.
struct Embedding {
    std::vector<int> map;
    int cod = 0;

    static Embedding identity(int n) {
        Embedding e;
        e.map.resize(n);
        for (int i = 1; i <= n; ++i) e.map[i - 1] = i;
        e.cod = n;
        return e;
    }

    /// Validates the table shape: values inside {1..cod}, strictly increasing.
    static Embedding checked(std::vector<int> map, int cod) {
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (map[i] < 1 || map[i] > cod)
                throw Error(Errc::InvalidArgument, "image outside codomain", map[i], cod);
            if (i && map[i - 1] >= map[i])
                throw Error(Errc::NotStrictlyIncreasing, "value table must increase",
                            map[i - 1], map[i]);
        }
        Embedding e;
        e.map = std::move(map);
        e.cod = cod;
        return e;
    }

    int dom() const { return static_cast<int>(map.size()); }

    int apply(int v) const {
        if (v < 1 || v > dom()) throw Error(Errc::DomainMismatch, "element outside domain", v);
        return map[v - 1];
    }

    Tuple apply(const Tuple& t) const {
        Tuple out;
        out.reserve(t.size());
        for (int v : t) out.push_back(apply(v));
        return out;
    }

    /// Canonical byte serialization: codomain then values, 4 bytes each,
    /// big-endian.  Lexicographic order on keys sorts hom sets.
    std::string key() const {
        std::string k;
        k.reserve(4 * (map.size() + 1));
        auto put = [&k](int v) {
            for (int shift = 24; shift >= 0; shift -= 8)
                k.push_back(static_cast<char>((v >> shift) & 0xff));
        };
        put(cod);
        for (int v : map) put(v);
        return k;
    }

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline Embedding compose_embeddings(const Embedding& g, const Embedding& f) {
    if (g.dom() != f.cod)
        throw Error(Errc::DomainMismatch, "codomain of f is not domain of g", g.dom(), f.cod);
    Embedding out;
    out.cod = g.cod;
    out.map.reserve(f.map.size());
    for (int v : f.map) out.map.push_back(g.map[v - 1]);
    return out;
}

/// Checks that map defines an embedding A into B: strictly increasing value
/// table, tuples of A land in B's relations, and tuples of B inside the
/// image pull back into A's relations.
inline bool is_embedding(const OrderedStructure& a, const OrderedStructure& b,
                         const Embedding& e) {
    if (a.signature() != b.signature()) return false;
    if (e.dom() != a.size() || e.cod != b.size()) return false;
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        if (e.map[i] < 1 || e.map[i] > b.size()) return false;
        if (i && e.map[i - 1] >= e.map[i]) return false;
    }
    std::vector<int> preimage(b.size() + 1, 0);
    for (int v = 1; v <= a.size(); ++v) preimage[e.map[v - 1]] = v;
    for (int s = 0; s < a.signature().count(); ++s) {
        for (const Tuple& t : a.tuples(s))
            if (!b.has_tuple(s, e.apply(t))) return false;
        for (const Tuple& u : b.tuples(s)) {
            Tuple back;
            back.reserve(u.size());
            for (int v : u) {
                if (!preimage[v]) break;
                back.push_back(preimage[v]);
            }
            if (back.size() == u.size() && !a.has_tuple(s, back)) return false;
        }
    }
    return true;
}

inline bool is_embedding(const Hypergraph& a, const Hypergraph& b, const Embedding& e) {
    if (a.edge_size() != b.edge_size()) return false;
    return is_embedding(hypergraph_to_structure(a), hypergraph_to_structure(b), e);
}

/// All strictly increasing maps {1..m} -> {1..n} in canonical order: the
/// hom sets of the chain category.
inline std::vector<Embedding> enumerate_increasing_maps(int m, int n,
                                                        std::size_t cap = Limits{}.hom_cap) {
    std::vector<Embedding> out;
    if (m < 0 || n < 0 || m > n) return out;
    std::vector<int> pick(m);
    auto extend = [&](auto&& self, int pos, int from) -> void {
        if (pos == m) {
            if (out.size() >= cap)
                throw Error(Errc::SizeLimitExceeded, "embedding enumeration exceeds cap",
                            static_cast<long>(cap));
            out.push_back(Embedding{pick, n});
            return;
        }
        for (int v = from; v <= n - (m - pos - 1); ++v) {
            pick[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    extend(extend, 0, 1);
    return out;
}

/// All embeddings of A into B in canonical (key-lexicographic) order.
///
/// Backtracking on the strictly increasing value table.  After placing the
/// image of vertex i the search checks exactly the constraints that became
/// decidable: tuples of A with maximum entry i must map into B, and tuples
/// of B lying inside the placed image with maximum entry map[i-1] must pull
/// back into A.  Entries of B-tuples below the last image that were skipped
/// can never enter the image later, so such tuples constrain nothing.
inline std::vector<Embedding> enumerate_embeddings(const OrderedStructure& a,
                                                   const OrderedStructure& b,
                                                   std::size_t cap = Limits{}.hom_cap) {
    std::vector<Embedding> out;
    if (a.signature() != b.signature())
        throw Error(Errc::SignatureMismatch, "embedding across different signatures");
    const int m = a.size(), n = b.size();
    if (m > n) return out;

    // Tuples of A indexed by their maximum entry.
    std::vector<std::vector<std::pair<int, const Tuple*>>> a_by_max(m + 1);
    for (int s = 0; s < a.signature().count(); ++s)
        for (const Tuple& t : a.tuples(s))
            a_by_max[*std::max_element(t.begin(), t.end())].push_back({s, &t});
    // Tuples of B indexed by their maximum entry.
    std::vector<std::vector<std::pair<int, const Tuple*>>> b_by_max(n + 1);
    for (int s = 0; s < b.signature().count(); ++s)
        for (const Tuple& u : b.tuples(s))
            b_by_max[*std::max_element(u.begin(), u.end())].push_back({s, &u});

    std::vector<int> image(m);
    std::vector<int> preimage(n + 1, 0);

    auto placed_ok = [&](int i) -> bool {
        for (const auto& [s, t] : a_by_max[i]) {
            Tuple mapped;
            mapped.reserve(t->size());
            for (int v : *t) mapped.push_back(image[v - 1]);
            if (!b.has_tuple(s, mapped)) return false;
        }
        for (const auto& [s, u] : b_by_max[image[i - 1]]) {
            Tuple back;
            back.reserve(u->size());
            for (int v : *u) {
                if (!preimage[v]) break;
                back.push_back(preimage[v]);
            }
            if (back.size() == u->size() && !a.has_tuple(s, back)) return false;
        }
        return true;
    };

    auto extend = [&](auto&& self, int i, int from) -> void {
        if (i > m) {
            if (out.size() >= cap)
                throw Error(Errc::SizeLimitExceeded, "embedding enumeration exceeds cap",
                            static_cast<long>(cap));
            out.push_back(Embedding{image, n});
            return;
        }
        for (int v = from; v <= n - (m - i); ++v) {
            image[i - 1] = v;
            preimage[v] = i;
            if (placed_ok(i)) self(self, i + 1, v + 1);
            preimage[v] = 0;
        }
    };
    extend(extend, 1, 1);
    return out;
}

inline std::vector<Embedding> enumerate_embeddings(const Hypergraph& a, const Hypergraph& b,
                                                   std::size_t cap = Limits{}.hom_cap) {
    if (a.edge_size() != b.edge_size())
        throw Error(Errc::KindMismatch, "embedding across different edge sizes", a.edge_size(),
                    b.edge_size());
    return enumerate_embeddings(hypergraph_to_structure(a), hypergraph_to_structure(b), cap);
}

}  // namespace ramsey
