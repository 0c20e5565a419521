#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/category.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/product.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

/// One bottom copy of a binary diagram: two labelled arrows into top copies.
template <typename M>
struct DiagramArrow {
    int into_first = 0;
    int into_second = 0;
    M first;
    M second;
};

/// A binary diagram: top_count copies of `top`, and for each arrow a copy
/// of `bottom` mapping into two of them.
template <typename C>
struct BinaryDiagram {
    typename C::Object bottom;
    typename C::Object top;
    int top_count = 0;
    std::vector<DiagramArrow<typename C::Morphism>> arrows;
};

/// A candidate compatible cone: one leg per top copy, all into the apex.
template <typename C>
struct Cone {
    typename C::Object apex;
    std::vector<typename C::Morphism> legs;
};

/// Checks that the cone commutes over the diagram: for every arrow,
/// leg[i] . first == leg[j] . second.  Returns the number of squares
/// checked; throws on the first violation.
template <typename C>
std::size_t check_cone(const C& cat, const BinaryDiagram<C>& dia, const Cone<C>& cone) {
    if (static_cast<int>(cone.legs.size()) != dia.top_count)
        throw Error(Errc::IncompatibleCone, "leg count differs from top copy count",
                    static_cast<long>(cone.legs.size()), dia.top_count);
    std::size_t squares = 0;
    for (const auto& arrow : dia.arrows) {
        if (arrow.into_first < 0 || arrow.into_first >= dia.top_count ||
            arrow.into_second < 0 || arrow.into_second >= dia.top_count)
            throw Error(Errc::InvalidArgument, "arrow points outside the top row");
        const auto left = cat.compose(cone.legs[arrow.into_first], arrow.first);
        const auto right = cat.compose(cone.legs[arrow.into_second], arrow.second);
        if (cat.key(left) != cat.key(right))
            throw Error(Errc::IncompatibleCone, "cone does not commute over an arrow",
                        arrow.into_first, arrow.into_second);
        ++squares;
    }
    return squares;
}

/// True when a product morphism lies on the diagonal.
inline bool is_diagonal(const std::vector<Embedding>& f) {
    for (std::size_t i = 1; i < f.size(); ++i)
        if (!(f[i] == f.front())) return false;
    return true;
}

inline std::vector<Embedding> diagonal_lift(const Embedding& f, int components) {
    return std::vector<Embedding>(static_cast<std::size_t>(components), f);
}

/// Splits a structure into its single-symbol slices, in signature order.
inline std::vector<OrderedStructure> slices(const OrderedStructure& a) {
    std::vector<OrderedStructure> out;
    out.reserve(a.signature().count());
    for (int s = 0; s < a.signature().count(); ++s)
        out.push_back(a.reduct({a.signature().names[s]}));
    return out;
}

/// Rebuilds a structure over `theta` from its single-symbol slices.  The
/// slices must agree on the universe and carry theta's symbols in order.
inline OrderedStructure merge_slices(const Signature& theta,
                                     const std::vector<OrderedStructure>& parts) {
    if (static_cast<int>(parts.size()) != theta.count())
        throw Error(Errc::SignatureMismatch, "slice count differs from symbol count",
                    static_cast<long>(parts.size()), theta.count());
    std::vector<std::vector<Tuple>> relations;
    relations.reserve(parts.size());
    int size = parts.empty() ? 0 : parts.front().size();
    for (int s = 0; s < theta.count(); ++s) {
        const Signature expect({theta.names[s]}, {theta.arities[s]});
        if (!(parts[s].signature() == expect))
            throw Error(Errc::SignatureMismatch, "slice carries a foreign symbol", s);
        if (parts[s].size() != size)
            throw Error(Errc::KindMismatch, "slices disagree on the universe",
                        parts[s].size(), size);
        relations.push_back(parts[s].tuples(0));
    }
    return OrderedStructure(theta, size, std::move(relations));
}

using RelProduct = ProductCategoryN<RelCategory>;

/// The closure of a binary diagram: an object of the diagonal together
/// with one leg per top copy.
struct Closure {
    OrderedStructure object;
    std::vector<Embedding> legs;
};

/// Closes a binary diagram of diagonal structures over a compatible cone
/// in the product of the single-symbol categories.  The closure lives on
/// the product of the apex universes in lexicographic order:
///   R_s = { (d_1..d_r) : (d_1^s..d_r^s) in R_s of apex s, d_1^1 < .. < d_r^1 }
/// and leg i sends b to (e_i^1(b), .., e_i^n(b)).  Every leg is verified
/// to be an embedding and the closed cone is verified to commute.
inline Closure close_binary_diagram_rel(const Signature& theta,
                                        const BinaryDiagram<RelProduct>& dia,
                                        const Cone<RelProduct>& cone, Limits limits = {}) {
    const int n = theta.count();
    if (n == 0) throw Error(Errc::InvalidArgument, "closure needs at least one symbol");
    if (static_cast<int>(cone.apex.size()) != n)
        throw Error(Errc::SignatureMismatch, "apex component count differs from symbol count",
                    static_cast<long>(cone.apex.size()), n);
    [[maybe_unused]] const OrderedStructure bottom = merge_slices(theta, dia.bottom);
    const OrderedStructure top = merge_slices(theta, dia.top);
    for (const auto& arrow : dia.arrows)
        if (!is_diagonal(arrow.first) || !is_diagonal(arrow.second))
            throw Error(Errc::InvalidArgument, "arrow label is not diagonal");

    std::vector<int> sizes(n);
    std::uint64_t universe = 1;
    for (int s = 0; s < n; ++s) {
        const Signature expect({theta.names[s]}, {theta.arities[s]});
        if (!(cone.apex[s].signature() == expect))
            throw Error(Errc::SignatureMismatch, "apex component carries a foreign symbol", s);
        sizes[s] = cone.apex[s].size();
        universe *= static_cast<std::uint64_t>(sizes[s]);
        if (universe > static_cast<std::uint64_t>(limits.hom_cap))
            throw Error(Errc::SizeLimitExceeded, "product universe exceeds cap");
    }

    // Lexicographic rank of a point of the product universe, 1-based, with
    // the first coordinate most significant.
    const auto rank = [&](const std::vector<int>& point) {
        long r = 0;
        for (int s = 0; s < n; ++s) r = r * sizes[s] + (point[s] - 1);
        return static_cast<int>(r) + 1;
    };

    std::uint64_t visited = 0;
    std::vector<std::vector<Tuple>> relations(n);
    for (int s = 0; s < n; ++s) {
        const int r = theta.arities[s];
        std::vector<std::vector<int>> points(r, std::vector<int>(n));
        for (const Tuple& base : cone.apex[s].tuples(0)) {
            // Coordinate s is pinned to the base tuple; the others range
            // freely subject to strictly increasing first coordinates.
            auto place = [&](auto&& self, int pos) -> void {
                if (pos == r) {
                    Tuple tuple(r);
                    for (int p = 0; p < r; ++p) tuple[p] = rank(points[p]);
                    relations[s].push_back(std::move(tuple));
                    return;
                }
                auto sweep = [&](auto&& more, int coord) -> void {
                    if (++visited > static_cast<std::uint64_t>(limits.node_cap))
                        throw Error(Errc::SizeLimitExceeded, "closure enumeration exceeds cap");
                    if (coord == n) {
                        if (pos > 0 && points[pos - 1][0] >= points[pos][0]) return;
                        self(self, pos + 1);
                        return;
                    }
                    if (coord == s) {
                        points[pos][coord] = base[pos];
                        more(more, coord + 1);
                        return;
                    }
                    for (int v = 1; v <= sizes[coord]; ++v) {
                        points[pos][coord] = v;
                        more(more, coord + 1);
                    }
                };
                sweep(sweep, 0);
            };
            place(place, 0);
        }
    }

    Closure out{OrderedStructure(theta, static_cast<int>(universe), std::move(relations)), {}};
    if (!out.object.is_absolutely_ordered())
        throw Error(Errc::ClosureFailed, "closure is not absolutely ordered");

    out.legs.reserve(cone.legs.size());
    std::vector<int> point(n);
    for (std::size_t i = 0; i < cone.legs.size(); ++i) {
        if (static_cast<int>(cone.legs[i].size()) != n)
            throw Error(Errc::SignatureMismatch, "leg component count differs from symbol count");
        std::vector<int> map(top.size());
        for (int b = 1; b <= top.size(); ++b) {
            for (int s = 0; s < n; ++s) point[s] = cone.legs[i][s].apply(b);
            map[b - 1] = rank(point);
        }
        Embedding leg{std::move(map), out.object.size()};
        if (!is_embedding(top, out.object, leg))
            throw Error(Errc::ClosureFailed, "closed leg is not an embedding",
                        static_cast<long>(i));
        out.legs.push_back(std::move(leg));
    }

    for (const auto& arrow : dia.arrows) {
        const Embedding left =
            compose_embeddings(out.legs[arrow.into_first], arrow.first.front());
        const Embedding right =
            compose_embeddings(out.legs[arrow.into_second], arrow.second.front());
        if (!(left == right))
            throw Error(Errc::ClosureFailed, "closed cone does not commute",
                        arrow.into_first, arrow.into_second);
    }
    return out;
}

/// The transfer from the product of single-symbol categories to the
/// diagonal: structures over a joint signature.  Given an apex tuple
/// (C_1..C_n) witnessing the product arrow, builds the binary diagram of
/// coincidences e_i . u == e_j . v over diagonal morphisms, closes it, and
/// decodes colorings of hom(A, D) through the product witness:
///   color'(e_s . u) = color(f_s . u), default 1,
/// a monochromatic e_l for color' yields the monochromatic f_l.
class SubcategoryTransfer {
public:
    SubcategoryTransfer(Signature theta, OrderedStructure a, OrderedStructure b,
                        std::vector<OrderedStructure> apexes, int k, Limits limits = {})
        : theta_(std::move(theta)), a_(std::move(a)), b_(std::move(b)), k_(k),
          limits_(limits), diagonal_(theta_, limits_) {
        if (k < kMinColors || k > kMaxColors)
            throw Error(Errc::InvalidArgument, "color count out of range", k);
        if (!a_.is_absolutely_ordered() || !b_.is_absolutely_ordered())
            throw Error(Errc::NotAbsolutelyOrdered, "transfer needs absolutely ordered objects");
        hom_ab_ = diagonal_.hom(a_, b_);
        if (hom_ab_.empty())
            throw Error(Errc::NoEmbedding, "bottom object does not embed into the top object");

        std::vector<RelCategory> components;
        for (int s = 0; s < theta_.count(); ++s)
            components.emplace_back(Signature({theta_.names[s]}, {theta_.arities[s]}),
                                    limits_);
        product_ = RelProduct(std::move(components));
        inst_ = make_arrow_instance(*product_, slices(a_), slices(b_), apexes);
        if (inst_.hom_bc.empty())
            throw Error(Errc::NoEmbedding, "top object does not embed into the apex");

        // Column of each diagonal morphism inside hom(A, B) of the product.
        std::unordered_map<std::string, int> ab_index;
        for (std::size_t i = 0; i < inst_.hom_ab.size(); ++i)
            ab_index.emplace(product_->key(inst_.hom_ab[i]), static_cast<int>(i));
        columns_.reserve(hom_ab_.size());
        for (const Embedding& u : hom_ab_) {
            const auto it =
                ab_index.find(product_->key(diagonal_lift(u, theta_.count())));
            if (it == ab_index.end())
                throw Error(Errc::NoEmbedding, "diagonal morphism missing from the product hom");
            columns_.push_back(it->second);
        }

        // Coincidences e_i . u == e_j . v become the diagram arrows.
        BinaryDiagram<RelProduct> dia{slices(a_), slices(b_),
                                      static_cast<int>(inst_.hom_bc.size()), {}};
        std::unordered_map<int, std::vector<std::pair<int, int>>> by_position;
        for (std::size_t i = 0; i < inst_.hom_bc.size(); ++i)
            for (std::size_t c = 0; c < columns_.size(); ++c)
                by_position[inst_.copies[i][columns_[c]]].emplace_back(static_cast<int>(i),
                                                                      static_cast<int>(c));
        for (auto& [pos, group] : by_position) {
            std::sort(group.begin(), group.end());
            for (std::size_t x = 0; x + 1 < group.size(); ++x)
                for (std::size_t y = x + 1; y < group.size(); ++y)
                    dia.arrows.push_back(
                        {group[x].first, group[y].first,
                         diagonal_lift(hom_ab_[group[x].second], theta_.count()),
                         diagonal_lift(hom_ab_[group[y].second], theta_.count())});
        }
        Cone<RelProduct> cone{std::move(apexes), inst_.hom_bc};
        check_cone(*product_, dia, cone);
        closure_ = close_binary_diagram_rel(theta_, dia, cone, limits_);
        diagram_ = std::move(dia);

        hom_ad_ = diagonal_.hom(a_, closure_->object);
        for (std::size_t i = 0; i < hom_ad_.size(); ++i)
            ad_index_.emplace(hom_ad_[i].key(), static_cast<int>(i));
    }

    const OrderedStructure& witness_object() const { return closure_->object; }
    const Closure& closure() const { return *closure_; }
    const BinaryDiagram<RelProduct>& diagram() const { return diagram_; }
    const std::vector<Embedding>& hom_bottom_witness() const { return hom_ad_; }
    std::size_t positions() const { return hom_ad_.size(); }

    struct Decoded {
        std::size_t top_copy = 0;  // index into hom(B, (C_1..C_n))
        Embedding witness;         // the closed leg f for that copy
        int color = 0;
    };

    Decoded decode(const Coloring& chi) const {
        if (chi.size() != hom_ad_.size())
            throw Error(Errc::InvalidArgument, "coloring length mismatch",
                        static_cast<long>(chi.size()), static_cast<long>(hom_ad_.size()));
        Coloring pulled(inst_.hom_ac.size(), 1);
        std::vector<char> assigned(inst_.hom_ac.size(), 0);
        for (std::size_t i = 0; i < inst_.hom_bc.size(); ++i)
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                const int pos = inst_.copies[i][columns_[c]];
                const int color = chi[position_of(
                    compose_embeddings(closure_->legs[i], hom_ab_[c]))];
                if (assigned[pos] && pulled[pos] != color)
                    throw Error(Errc::ClosureFailed,
                                "coincident morphisms received different colors", pos);
                pulled[pos] = color;
                assigned[pos] = 1;
            }

        std::size_t chosen = inst_.hom_bc.size();
        for (std::size_t i = 0; i < inst_.hom_bc.size(); ++i)
            if (is_monochromatic(inst_.copies[i], pulled)) {
                chosen = i;
                break;
            }
        if (chosen == inst_.hom_bc.size())
            throw Error(Errc::ComponentArrowUnverified,
                        "apex does not resolve the pulled-back coloring");

        Decoded out;
        out.top_copy = chosen;
        out.witness = closure_->legs[chosen];
        out.color = pulled[inst_.copies[chosen].front()];
        for (const Embedding& u : hom_ab_)
            if (chi[position_of(compose_embeddings(out.witness, u))] != out.color)
                throw Error(Errc::ClosureFailed, "decoded witness is not monochromatic");
        return out;
    }

    ArrowReport verify(SearchMode mode) const {
        return verify_arrow(diagonal_, a_, b_, closure_->object, k_, mode, limits_);
    }

    SampleReport sampled_verify(std::uint64_t samples, std::uint64_t seed) const {
        SampleReport report;
        report.seed = seed;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(1, k_);
        Coloring chi(hom_ad_.size());
        for (std::uint64_t s = 0; s < samples; ++s) {
            for (auto& c : chi) c = pick(rng);
            ++report.checked;
            try {
                decode(chi);
            } catch (const Error&) {
                report.ok = false;
                report.failing = chi;
                return report;
            }
        }
        return report;
    }

private:
    int position_of(const Embedding& e) const {
        const auto it = ad_index_.find(e.key());
        if (it == ad_index_.end())
            throw Error(Errc::NotAnEmbedding, "image escapes the enumerated hom set");
        return it->second;
    }

    Signature theta_;
    OrderedStructure a_;
    OrderedStructure b_;
    int k_;
    Limits limits_;
    RelCategory diagonal_;
    std::optional<RelProduct> product_;
    ArrowInstance<RelProduct> inst_;
    std::vector<Embedding> hom_ab_;    // diagonal hom(A, B)
    std::vector<int> columns_;         // its columns inside the product hom(A, B)
    BinaryDiagram<RelProduct> diagram_;
    std::optional<Closure> closure_;
    std::vector<Embedding> hom_ad_;
    std::unordered_map<std::string, int> ad_index_;
};

}  // namespace ramsey
