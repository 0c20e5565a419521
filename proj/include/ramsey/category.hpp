#pragma once

#include <concepts>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/param_word.hpp"

namespace ramsey {

/// A category presented by finite hom sets.  `hom` returns each hom set in
/// canonical order: strictly ascending under the byte serialization `key`.
template <typename C>
concept FiniteCategory = requires(const C& cat, const typename C::Object& x,
                                  const typename C::Morphism& f) {
    typename C::Object;
    typename C::Morphism;
    { cat.hom(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
    { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
    { cat.identity(x) } -> std::same_as<typename C::Morphism>;
    { cat.key(f) } -> std::same_as<std::string>;
};

template <FiniteCategory C>
std::vector<typename C::Morphism> enumerate_hom(const C& cat, const typename C::Object& x,
                                                const typename C::Object& y) {
    return cat.hom(x, y);
}

/// Finite chains and strictly increasing maps; objects are chain lengths.
class ChainCategory {
public:
    using Object = int;
    using Morphism = Embedding;

    explicit ChainCategory(Limits limits = {}) : limits_(limits) {}

    std::vector<Morphism> hom(Object m, Object n) const {
        if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "chain length is nonnegative");
        return enumerate_increasing_maps(m, n, limits_.hom_cap);
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        return compose_embeddings(g, f);
    }

    Morphism identity(Object n) const { return Embedding::identity(n); }

    std::string key(const Morphism& f) const { return f.key(); }

private:
    Limits limits_;
};

/// Linearly ordered b-uniform hypergraphs and embeddings.
class HyperCategory {
public:
    using Object = Hypergraph;
    using Morphism = Embedding;

    explicit HyperCategory(int b, Limits limits = {}) : b_(b), limits_(limits) {
        if (b < 2) throw Error(Errc::InvalidArgument, "edge size must be at least 2", b);
    }

    int edge_size() const { return b_; }

    std::vector<Morphism> hom(const Object& a, const Object& b) const {
        require(a);
        require(b);
        return enumerate_embeddings(a, b, limits_.hom_cap);
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        return compose_embeddings(g, f);
    }

    Morphism identity(const Object& a) const { return Embedding::identity(a.size()); }

    std::string key(const Morphism& f) const { return f.key(); }

private:
    void require(const Object& a) const {
        if (a.edge_size() != b_)
            throw Error(Errc::KindMismatch, "object has foreign edge size", a.edge_size(), b_);
    }

    int b_;
    Limits limits_;
};

/// Linearly ordered structures over a fixed signature and embeddings.
class RelCategory {
public:
    using Object = OrderedStructure;
    using Morphism = Embedding;

    explicit RelCategory(Signature sig, Limits limits = {})
        : sig_(std::move(sig)), limits_(limits) {}

    const Signature& signature() const { return sig_; }

    std::vector<Morphism> hom(const Object& a, const Object& b) const {
        require(a);
        require(b);
        return enumerate_embeddings(a, b, limits_.hom_cap);
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        return compose_embeddings(g, f);
    }

    Morphism identity(const Object& a) const { return Embedding::identity(a.size()); }

    std::string key(const Morphism& f) const { return f.key(); }

private:
    void require(const Object& a) const {
        if (a.signature() != sig_)
            throw Error(Errc::SignatureMismatch, "object over a foreign signature");
    }

    Signature sig_;
    Limits limits_;
};

/// Outcome of an axiom sweep over a finite object list.
struct LawReport {
    bool ok = true;
    std::string failure;
    std::size_t hom_sets = 0;
    std::size_t identities = 0;
    std::size_t compositions = 0;
    std::size_t associations = 0;
};

/// Checks the category axioms and the canonical-order contract on every
/// hom set spanned by `objects`: identities are neutral, composites land in
/// the enumerated hom sets, composition is associative, and each hom set is
/// strictly sorted by key.
template <FiniteCategory C>
LawReport check_category_laws(const C& cat, const std::vector<typename C::Object>& objects) {
    LawReport report;
    const int count = static_cast<int>(objects.size());
    auto fail = [&report](std::string what) {
        if (report.ok) {
            report.ok = false;
            report.failure = std::move(what);
        }
    };

    std::vector<std::vector<std::vector<typename C::Morphism>>> homs(count);
    for (int x = 0; x < count; ++x) {
        homs[x].resize(count);
        for (int y = 0; y < count; ++y) {
            homs[x][y] = cat.hom(objects[x], objects[y]);
            ++report.hom_sets;
            for (std::size_t i = 1; i < homs[x][y].size(); ++i)
                if (cat.key(homs[x][y][i - 1]) >= cat.key(homs[x][y][i]))
                    fail("hom set not strictly sorted by key");
        }
    }

    auto contains = [&cat](const std::vector<typename C::Morphism>& hom, const std::string& key) {
        for (const auto& f : hom)
            if (cat.key(f) == key) return true;
        return false;
    };

    for (int x = 0; x < count && report.ok; ++x)
        for (int y = 0; y < count && report.ok; ++y) {
            const auto idx = cat.identity(objects[x]);
            const auto idy = cat.identity(objects[y]);
            for (const auto& f : homs[x][y]) {
                ++report.identities;
                if (cat.key(cat.compose(f, idx)) != cat.key(f) ||
                    cat.key(cat.compose(idy, f)) != cat.key(f)) {
                    fail("identity is not neutral");
                    break;
                }
            }
        }

    for (int x = 0; x < count && report.ok; ++x)
        for (int y = 0; y < count && report.ok; ++y)
            for (int z = 0; z < count && report.ok; ++z)
                for (const auto& f : homs[x][y]) {
                    for (const auto& g : homs[y][z]) {
                        ++report.compositions;
                        if (!contains(homs[x][z], cat.key(cat.compose(g, f)))) {
                            fail("composite escapes the enumerated hom set");
                            break;
                        }
                    }
                    if (!report.ok) break;
                }

    for (int x = 0; x < count && report.ok; ++x)
        for (int y = 0; y < count && report.ok; ++y)
            for (int z = 0; z < count && report.ok; ++z)
                for (int w = 0; w < count && report.ok; ++w)
                    for (const auto& f : homs[x][y]) {
                        for (const auto& g : homs[y][z]) {
                            for (const auto& h : homs[z][w]) {
                                ++report.associations;
                                const auto left = cat.compose(cat.compose(h, g), f);
                                const auto right = cat.compose(h, cat.compose(g, f));
                                if (cat.key(left) != cat.key(right)) {
                                    fail("composition is not associative");
                                    break;
                                }
                            }
                            if (!report.ok) break;
                        }
                        if (!report.ok) break;
                    }

    return report;
}

/// Checks that every morphism spanned by `objects` is monic: f.g = f.h
/// forces g = h whenever the three composites exist.
template <FiniteCategory C>
bool check_all_monic(const C& cat, const std::vector<typename C::Object>& objects,
                     std::string* counterexample = nullptr) {
    const int count = static_cast<int>(objects.size());
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y)
            for (const auto& f : cat.hom(objects[x], objects[y]))
                for (int w = 0; w < count; ++w) {
                    const auto pre = cat.hom(objects[w], objects[x]);
                    for (std::size_t i = 0; i < pre.size(); ++i)
                        for (std::size_t j = i + 1; j < pre.size(); ++j)
                            if (cat.key(cat.compose(f, pre[i])) ==
                                cat.key(cat.compose(f, pre[j]))) {
                                if (counterexample) {
                                    std::ostringstream out;
                                    out << "f collapses morphisms " << i << " and " << j
                                        << " of hom(" << w << ", " << x << ")";
                                    *counterexample = out.str();
                                }
                                return false;
                            }
                }
    return true;
}

static_assert(FiniteCategory<GrCategory>);
static_assert(FiniteCategory<ChainCategory>);
static_assert(FiniteCategory<HyperCategory>);
static_assert(FiniteCategory<RelCategory>);

}  // namespace ramsey
