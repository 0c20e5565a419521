#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/quasiorder.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

/// The derived language for the absolute-order encoding: one symbol (R,s)
/// per original symbol R and total quasiorder s on {1..ar(R)}, with arity
/// the number of classes of s.
struct DaggerSignature {
    struct Origin {
        int symbol;  // index into the original signature
        TotalQuasiorder sigma;
    };

    Signature signature;          // the derived language
    std::vector<Origin> origins;  // aligned with signature
    Signature base;               // the original language

    int index_of(int origin_symbol, const TotalQuasiorder& sigma) const {
        for (std::size_t i = 0; i < origins.size(); ++i)
            if (origins[i].symbol == origin_symbol && origins[i].sigma == sigma)
                return static_cast<int>(i);
        throw Error(Errc::UnknownSymbol, "no derived symbol for this type");
    }
};

inline DaggerSignature dagger_signature(const Signature& base) {
    DaggerSignature out;
    out.base = base;
    std::vector<std::string> names;
    std::vector<int> arities;
    for (int s = 0; s < base.count(); ++s)
        for (const TotalQuasiorder& sigma : all_total_quasiorders(base.arities[s])) {
            names.push_back(base.names[s] + "@" + sigma.key());
            arities.push_back(sigma.class_count());
            out.origins.push_back({s, sigma});
        }
    out.signature = Signature(std::move(names), std::move(arities));
    return out;
}

/// The absolute-order encoding: (R,s) holds the matrices of the R-tuples
/// of type s.  The result is always absolutely ordered.
inline OrderedStructure dagger(const OrderedStructure& a) {
    const DaggerSignature ds = dagger_signature(a.signature());
    std::vector<std::vector<Tuple>> relations(ds.signature.count());
    for (int s = 0; s < a.signature().count(); ++s)
        for (const Tuple& t : a.tuples(s))
            relations[ds.index_of(s, tp(t))].push_back(mat(t));
    return OrderedStructure(ds.signature, a.size(), std::move(relations));
}

/// The decoding: R gathers tup(s, b) over every derived symbol (R,s) and
/// every matrix b it holds.  Inverse of the encoding on both sides.
inline OrderedStructure star(const OrderedStructure& b, const Signature& base) {
    const DaggerSignature ds = dagger_signature(base);
    if (b.signature() != ds.signature)
        throw Error(Errc::SignatureMismatch, "structure is not over the derived language");
    if (!b.is_absolutely_ordered())
        throw Error(Errc::NotAbsolutelyOrdered, "decoding needs increasing tuples");
    std::vector<std::vector<Tuple>> relations(base.count());
    for (int i = 0; i < ds.signature.count(); ++i) {
        const auto& origin = ds.origins[i];
        for (const Tuple& m : b.tuples(i))
            relations[origin.symbol].push_back(tup(origin.sigma, m));
    }
    return OrderedStructure(base, b.size(), std::move(relations));
}

/// Collapse of a language against a concrete structure: symbols with empty
/// extension are dropped, symbols sharing their extension with an earlier
/// one alias the earliest such symbol, the rest are kept.  The kept symbols
/// form the working language for the Ramsey step.
struct SigmaReduction {
    enum class Fate { Kept, Alias, Empty };

    std::vector<std::string> sigma;  // kept symbol names, declaration order
    std::vector<Fate> fate;          // per original symbol
    std::vector<int> alias;          // representative index per symbol; -1 when empty

    bool empty() const { return sigma.empty(); }
};

inline SigmaReduction sigma_reduce(const OrderedStructure& b) {
    const Signature& sig = b.signature();
    SigmaReduction out;
    out.fate.resize(sig.count(), SigmaReduction::Fate::Kept);
    out.alias.resize(sig.count(), -1);
    for (int s = 0; s < sig.count(); ++s) {
        if (b.tuples(s).empty()) {
            out.fate[s] = SigmaReduction::Fate::Empty;
            continue;
        }
        int rep = s;
        for (int earlier = 0; earlier < s; ++earlier)
            if (out.fate[earlier] == SigmaReduction::Fate::Kept &&
                sig.arities[earlier] == sig.arities[s] && b.tuples(earlier) == b.tuples(s)) {
                rep = earlier;
                break;
            }
        out.alias[s] = rep;
        if (rep == s) {
            out.sigma.push_back(sig.names[s]);
        } else {
            out.fate[s] = SigmaReduction::Fate::Alias;
        }
    }
    return out;
}

/// Checks the reduction computed from B remains valid on A; this is a
/// consequence of A embedding into B, so a failure means the pair was
/// never a well-posed instance.
inline void check_reduction_on(const SigmaReduction& red, const OrderedStructure& a) {
    if (red.fate.size() != static_cast<std::size_t>(a.signature().count()))
        throw Error(Errc::SignatureMismatch, "reduction over a different language");
    for (int s = 0; s < a.signature().count(); ++s) {
        switch (red.fate[s]) {
            case SigmaReduction::Fate::Empty:
                if (!a.tuples(s).empty())
                    throw Error(Errc::NoEmbedding,
                                "symbol empty in the target but not in the source");
                break;
            case SigmaReduction::Fate::Alias:
                if (a.tuples(s) != a.tuples(red.alias[s]))
                    throw Error(Errc::NoEmbedding,
                                "aliased symbols disagree on the source");
                break;
            case SigmaReduction::Fate::Kept:
                break;
        }
    }
}

/// Rebuilds a full-language structure from a witness over the kept
/// symbols: kept symbols copy their relation, aliases copy their
/// representative's, empty symbols stay empty.
inline OrderedStructure expand_witness(const OrderedStructure& c, const SigmaReduction& red,
                                       const Signature& base) {
    if (red.fate.size() != static_cast<std::size_t>(base.count()))
        throw Error(Errc::SignatureMismatch, "reduction over a different language");
    std::vector<std::string> kept_names;
    std::vector<int> kept_arities;
    std::vector<int> kept_index(base.count(), -1);
    for (int s = 0; s < base.count(); ++s)
        if (red.fate[s] == SigmaReduction::Fate::Kept) {
            kept_index[s] = static_cast<int>(kept_names.size());
            kept_names.push_back(base.names[s]);
            kept_arities.push_back(base.arities[s]);
        }
    const Signature sigma(kept_names, kept_arities);
    if (c.signature() != sigma)
        throw Error(Errc::SignatureMismatch, "witness is not over the kept symbols");
    std::vector<std::vector<Tuple>> relations(base.count());
    for (int s = 0; s < base.count(); ++s) {
        if (red.fate[s] == SigmaReduction::Fate::Empty) continue;
        relations[s] = c.tuples(kept_index[red.alias[s]]);
    }
    return OrderedStructure(base, c.size(), std::move(relations));
}

}  // namespace ramsey
