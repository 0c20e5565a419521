#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// A finite relational language: symbol names with arities, in a fixed
/// declaration order.  The declaration order is the tie-breaking order used
/// wherever a canonical symbol choice is needed.
struct Signature {
    std::vector<std::string> names;
    std::vector<int> arities;

    Signature() = default;
    Signature(std::vector<std::string> ns, std::vector<int> ars)
        : names(std::move(ns)), arities(std::move(ars)) {
        if (names.size() != arities.size())
            throw Error(Errc::SignatureMismatch, "name/arity count mismatch",
                        static_cast<long>(names.size()), static_cast<long>(arities.size()));
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw Error(Errc::InvalidArgument, "empty symbol name");
            if (arities[i] < 1)
                throw Error(Errc::InvalidArgument, "symbol arity must be positive", arities[i]);
            for (std::size_t j = 0; j < i; ++j)
                if (names[j] == names[i])
                    throw Error(Errc::InvalidArgument, "duplicate symbol '" + names[i] + "'");
        }
    }

    int count() const { return static_cast<int>(names.size()); }

    int index_of(const std::string& name) const {
        for (int s = 0; s < count(); ++s)
            if (names[s] == name) return s;
        throw Error(Errc::UnknownSymbol, "no symbol '" + name + "'");
    }

    std::string key() const {
        std::ostringstream out;
        for (int s = 0; s < count(); ++s) out << names[s] << '/' << arities[s] << ';';
        return out.str();
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

using Tuple = std::vector<int>;

/// A finite linearly ordered relational structure: universe {1..n} carrying
/// its natural order, plus one set of tuples per signature symbol.  Tuples
/// may repeat entries and need not be increasing; each relation is stored
/// lex-sorted without duplicates.
class OrderedStructure {
public:
    OrderedStructure(Signature sig, int n, std::vector<std::vector<Tuple>> relations)
        : sig_(std::move(sig)), n_(n), relations_(std::move(relations)) {
        if (n < 0) throw Error(Errc::InvalidArgument, "negative universe size", n);
        if (static_cast<int>(relations_.size()) != sig_.count())
            throw Error(Errc::SignatureMismatch, "relation count differs from signature",
                        static_cast<long>(relations_.size()), sig_.count());
        for (int s = 0; s < sig_.count(); ++s) {
            for (const Tuple& t : relations_[s]) {
                if (static_cast<int>(t.size()) != sig_.arities[s])
                    throw Error(Errc::ArityMismatch, "tuple length differs from arity",
                                static_cast<long>(t.size()), sig_.arities[s]);
                for (int v : t)
                    if (v < 1 || v > n)
                        throw Error(Errc::InvalidArgument, "tuple entry outside universe", v);
            }
            std::sort(relations_[s].begin(), relations_[s].end());
            relations_[s].erase(std::unique(relations_[s].begin(), relations_[s].end()),
                                relations_[s].end());
        }
    }

    const Signature& signature() const { return sig_; }
    int size() const { return n_; }
    const std::vector<Tuple>& tuples(int symbol) const { return relations_.at(symbol); }
    const std::vector<std::vector<Tuple>>& relations() const { return relations_; }

    bool has_tuple(int symbol, const Tuple& t) const {
        const auto& rel = relations_.at(symbol);
        return std::binary_search(rel.begin(), rel.end(), t);
    }

    /// Substructure induced by S, universe renumbered along the increasing
    /// bijection S -> {1..|S|}; keeps exactly the tuples inside S.
    OrderedStructure induced(const IntSet& s) const {
        std::vector<int> rank(n_ + 1, 0);
        int next = 0;
        for (int v : s) {
            if (v < 1 || v > n_) throw Error(Errc::InvalidArgument, "vertex outside universe", v);
            if (rank[v]) throw Error(Errc::InvalidArgument, "repeated vertex in selection", v);
            rank[v] = ++next;
        }
        std::vector<std::vector<Tuple>> kept(sig_.count());
        for (int sym = 0; sym < sig_.count(); ++sym)
            for (const Tuple& t : relations_[sym]) {
                Tuple image;
                image.reserve(t.size());
                for (int v : t) {
                    if (!rank[v]) break;
                    image.push_back(rank[v]);
                }
                if (image.size() == t.size()) kept[sym].push_back(std::move(image));
            }
        return OrderedStructure(sig_, next, std::move(kept));
    }

    /// Reduct to the named symbols.  The reduct's signature keeps this
    /// structure's declaration order regardless of the order of `keep`.
    OrderedStructure reduct(const std::vector<std::string>& keep) const {
        for (const std::string& name : keep) sig_.index_of(name);  // reject unknown names
        std::vector<std::string> names;
        std::vector<int> arities;
        std::vector<std::vector<Tuple>> rels;
        for (int s = 0; s < sig_.count(); ++s) {
            if (std::find(keep.begin(), keep.end(), sig_.names[s]) == keep.end()) continue;
            names.push_back(sig_.names[s]);
            arities.push_back(sig_.arities[s]);
            rels.push_back(relations_[s]);
        }
        return OrderedStructure(Signature(std::move(names), std::move(arities)), n_,
                                std::move(rels));
    }

    /// True when every tuple of every relation is strictly increasing.
    bool is_absolutely_ordered() const {
        for (const auto& rel : relations_)
            for (const Tuple& t : rel)
                if (std::adjacent_find(t.begin(), t.end(), std::greater_equal<int>()) != t.end())
                    return false;
        return true;
    }

    std::string key() const {
        std::ostringstream out;
        out << 'S' << n_ << '|' << sig_.key();
        for (const auto& rel : relations_) {
            out << '|';
            for (const Tuple& t : rel) {
                out << '(';
                for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
                out << ')';
            }
        }
        return out.str();
    }

    friend bool operator==(const OrderedStructure&, const OrderedStructure&) = default;

private:
    Signature sig_;
    int n_;
    std::vector<std::vector<Tuple>> relations_;
};

/// View a b-uniform hypergraph as a single-symbol structure whose relation
/// holds the edges as increasing tuples.  The result is absolutely ordered.
inline OrderedStructure hypergraph_to_structure(const Hypergraph& h,
                                                const std::string& symbol = "E") {
    std::vector<Tuple> tuples;
    tuples.reserve(h.edges().size());
    for (const IntSet& e : h.edges()) tuples.push_back(e);
    return OrderedStructure(Signature({symbol}, {h.edge_size()}), h.size(), {std::move(tuples)});
}

/// Inverse of the hypergraph view: requires a single symbol of arity >= 2
/// and an absolutely ordered structure.
inline Hypergraph structure_to_hypergraph(const OrderedStructure& a) {
    if (a.signature().count() != 1)
        throw Error(Errc::SignatureMismatch, "expected exactly one symbol",
                    a.signature().count(), 1);
    if (a.signature().arities[0] < 2)
        throw Error(Errc::InvalidArgument, "edge size must be at least 2",
                    a.signature().arities[0]);
    if (!a.is_absolutely_ordered())
        throw Error(Errc::NotAbsolutelyOrdered, "relation holds a non-increasing tuple");
    std::vector<IntSet> edges;
    edges.reserve(a.tuples(0).size());
    for (const Tuple& t : a.tuples(0)) edges.push_back(t);
    return Hypergraph(a.size(), a.signature().arities[0], std::move(edges));
}

}  // namespace ramsey
