#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/category.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace detail {

/// Length-prefixed concatenation keeps component keys from bleeding into
/// each other while preserving per-component lexicographic order (keys in
/// one hom set all have equal length).
inline void append_framed(std::string& out, const std::string& part) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((part.size() >> shift) & 0xff));
    out += part;
}

}  // namespace detail

/// Product of two categories: componentwise objects, morphisms and
/// composition.  hom pairs are enumerated outer-first, which matches the
/// canonical key order.
template <FiniteCategory C1, FiniteCategory C2>
class ProductCategory2 {
public:
    using Object = std::pair<typename C1::Object, typename C2::Object>;
    using Morphism = std::pair<typename C1::Morphism, typename C2::Morphism>;

    ProductCategory2(C1 first, C2 second)
        : first_(std::move(first)), second_(std::move(second)) {}

    const C1& first() const { return first_; }
    const C2& second() const { return second_; }

    std::vector<Morphism> hom(const Object& a, const Object& b) const {
        std::vector<Morphism> out;
        const auto h1 = first_.hom(a.first, b.first);
        const auto h2 = second_.hom(a.second, b.second);
        out.reserve(h1.size() * h2.size());
        for (const auto& f : h1)
            for (const auto& g : h2) out.push_back({f, g});
        return out;
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        return {first_.compose(g.first, f.first), second_.compose(g.second, f.second)};
    }

    Morphism identity(const Object& a) const {
        return {first_.identity(a.first), second_.identity(a.second)};
    }

    std::string key(const Morphism& f) const {
        std::string k;
        detail::append_framed(k, first_.key(f.first));
        detail::append_framed(k, second_.key(f.second));
        return k;
    }

private:
    C1 first_;
    C2 second_;
};

/// Finite power of categories sharing one C++ type (the components may
/// still differ, e.g. structure categories over different signatures).
template <FiniteCategory C>
class ProductCategoryN {
public:
    using Object = std::vector<typename C::Object>;
    using Morphism = std::vector<typename C::Morphism>;

    explicit ProductCategoryN(std::vector<C> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw Error(Errc::InvalidArgument, "product needs at least one component");
    }

    std::size_t arity() const { return components_.size(); }
    const C& component(std::size_t i) const { return components_.at(i); }

    std::vector<Morphism> hom(const Object& a, const Object& b) const {
        require(a);
        require(b);
        std::vector<std::vector<typename C::Morphism>> homs;
        homs.reserve(arity());
        std::size_t total = 1;
        for (std::size_t i = 0; i < arity(); ++i) {
            homs.push_back(components_[i].hom(a[i], b[i]));
            total *= homs.back().size();
        }
        std::vector<Morphism> out;
        if (total == 0) return out;
        out.reserve(total);
        Morphism current;
        current.reserve(arity());
        auto extend = [&](auto&& self, std::size_t i) -> void {
            if (i == arity()) {
                out.push_back(current);
                return;
            }
            for (const auto& f : homs[i]) {
                current.push_back(f);
                self(self, i + 1);
                current.pop_back();
            }
        };
        extend(extend, 0);
        return out;
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (g.size() != arity() || f.size() != arity())
            throw Error(Errc::DomainMismatch, "component count mismatch");
        Morphism out;
        out.reserve(arity());
        for (std::size_t i = 0; i < arity(); ++i)
            out.push_back(components_[i].compose(g[i], f[i]));
        return out;
    }

    Morphism identity(const Object& a) const {
        require(a);
        Morphism out;
        out.reserve(arity());
        for (std::size_t i = 0; i < arity(); ++i) out.push_back(components_[i].identity(a[i]));
        return out;
    }

    std::string key(const Morphism& f) const {
        std::string k;
        for (std::size_t i = 0; i < f.size(); ++i)
            detail::append_framed(k, components_[i].key(f[i]));
        return k;
    }

private:
    void require(const Object& a) const {
        if (a.size() != arity())
            throw Error(Errc::DomainMismatch, "object has wrong component count",
                        static_cast<long>(a.size()), static_cast<long>(arity()));
    }

    std::vector<C> components_;
};

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && total > cap / base)
            throw Error(Errc::SizeLimitExceeded, "power exceeds cap");
        total *= base;
    }
    return total;
}

/// The two-component product transfer.  From witnessed component arrows
///   C1 -> (B1)^{A1}_k   and   C2 -> (B2)^{A2}_{k^t},   t = |hom(A1,C1)|,
/// the pair (C1,C2) witnesses the product arrow, and any k-coloring of the
/// product hom set decodes to a concrete monochromatic witness: collapse
/// the coloring to a k^t-coloring of hom(A2,C2), find w2, read off the
/// induced k-coloring of hom(A1,C1) on the w2 copy, find w1.
template <FiniteCategory C1, FiniteCategory C2>
class ProductTransfer {
public:
    using Product = ProductCategory2<C1, C2>;
    using Object = typename Product::Object;

    ProductTransfer(C1 cat1, typename C1::Object a1, typename C1::Object b1,
                    typename C1::Object c1, const ArrowReport& witness1, C2 cat2,
                    typename C2::Object a2, typename C2::Object b2, typename C2::Object c2,
                    const ArrowReport& witness2, int k)
        : product_(std::move(cat1), std::move(cat2)), a_{a1, a2}, b_{b1, b2}, c_{c1, c2},
          k_(k) {
        inst1_ = make_arrow_instance(product_.first(), a_.first, b_.first, c_.first);
        inst2_ = make_arrow_instance(product_.second(), a_.second, b_.second, c_.second);
        t_ = inst1_.hom_ac.size();
        if (witness1.verdict != ArrowReport::Verdict::Witnessed || witness1.colors != k)
            throw Error(Errc::ComponentArrowUnverified, "first component arrow not witnessed");
        const std::uint64_t colors2 = checked_pow(static_cast<std::uint64_t>(k), t_, 1u << 30);
        if (witness2.verdict != ArrowReport::Verdict::Witnessed ||
            static_cast<std::uint64_t>(witness2.colors) != colors2)
            throw Error(Errc::ComponentArrowUnverified,
                        "second component arrow not witnessed at k^t colors",
                        witness2.colors, static_cast<long>(colors2));
    }

    const Product& product() const { return product_; }
    const Object& bottom() const { return a_; }
    const Object& middle() const { return b_; }
    const Object& apex() const { return c_; }
    std::uint64_t t() const { return t_; }
    int colors() const { return k_; }

    /// Positions of the product hom set pair up as p = i1 * n2 + i2.
    std::size_t positions() const { return inst1_.hom_ac.size() * inst2_.hom_ac.size(); }

    struct Decoded {
        std::size_t w1 = 0;       // index into hom(B1,C1)
        std::size_t w2 = 0;       // index into hom(B2,C2)
        std::size_t witness = 0;  // index into the product hom(B,C)
        int color = 0;
    };

    /// Runs the constructive decoding on a k-coloring of the product hom
    /// set and verifies the resulting copy is monochromatic.
    Decoded decode(const Coloring& chi) const {
        const std::size_t n2 = inst2_.hom_ac.size();
        if (chi.size() != positions())
            throw Error(Errc::InvalidArgument, "coloring length mismatch",
                        static_cast<long>(chi.size()), static_cast<long>(positions()));

        // chi' assigns to each position of hom(A2,C2) the tuple of colors
        // along hom(A1,C1), encoded as a base-k numeral.
        std::vector<std::uint64_t> chi2(n2);
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            std::uint64_t value = 0;
            for (std::size_t i1 = 0; i1 < inst1_.hom_ac.size(); ++i1)
                value = value * static_cast<std::uint64_t>(k_) +
                        static_cast<std::uint64_t>(chi[i1 * n2 + i2] - 1);
            chi2[i2] = value;
        }

        std::size_t w2 = inst2_.hom_bc.size();
        for (std::size_t w = 0; w < inst2_.hom_bc.size(); ++w) {
            const auto& copy = inst2_.copies[w];
            bool mono = true;
            for (std::size_t i = 1; i < copy.size(); ++i)
                if (chi2[copy[i]] != chi2[copy[0]]) {
                    mono = false;
                    break;
                }
            if (mono) {
                w2 = w;
                break;
            }
        }
        if (w2 == inst2_.hom_bc.size())
            throw Error(Errc::ComponentArrowUnverified,
                        "no monochromatic copy for the collapsed coloring");

        // chi'' reads the first component's colors along any member of the
        // w2 copy; chi'-monochromaticity makes the choice immaterial.
        const int e2 = inst2_.copies[w2].front();
        Coloring chi1(inst1_.hom_ac.size());
        for (std::size_t i1 = 0; i1 < chi1.size(); ++i1) chi1[i1] = chi[i1 * n2 + e2];

        std::size_t w1 = inst1_.hom_bc.size();
        for (std::size_t w = 0; w < inst1_.hom_bc.size(); ++w)
            if (is_monochromatic(inst1_.copies[w], chi1)) {
                w1 = w;
                break;
            }
        if (w1 == inst1_.hom_bc.size())
            throw Error(Errc::ComponentArrowUnverified,
                        "no monochromatic copy for the induced coloring");

        Decoded out;
        out.w1 = w1;
        out.w2 = w2;
        out.witness = w1 * inst2_.hom_bc.size() + w2;
        out.color = chi1[inst1_.copies[w1].front()];
        for (int i1 : inst1_.copies[w1])
            for (int i2 : inst2_.copies[w2])
                if (chi[static_cast<std::size_t>(i1) * n2 + static_cast<std::size_t>(i2)] !=
                    out.color)
                    throw Error(Errc::ComponentArrowUnverified,
                                "decoded witness is not monochromatic");
        return out;
    }

    /// Direct verification of the product arrow.
    ArrowReport verify(SearchMode mode, const Limits& limits = {}) const {
        return verify_arrow(product_, a_, b_, c_, k_, mode, limits);
    }

    /// Decodes pseudorandom colorings; every one must decode cleanly.
    SampleReport sampled_verify(std::uint64_t samples, std::uint64_t seed) const {
        SampleReport report;
        report.seed = seed;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(1, k_);
        Coloring chi(positions());
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
    Product product_;
    Object a_, b_, c_;
    int k_;
    std::uint64_t t_ = 0;
    ArrowInstance<C1> inst1_;
    ArrowInstance<C2> inst2_;
};

}  // namespace ramsey
