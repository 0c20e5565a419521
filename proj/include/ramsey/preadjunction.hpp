#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/category.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/param_word.hpp"

namespace ramsey {

/// Downset count of a hypergraph: the object map into the word category.
inline int downset_count_F(const Hypergraph& h) {
    return static_cast<int>(downsets(h).size());
}

/// Counters for the three embedding checks run inside phi.
struct PhiAudit {
    std::size_t order_checks = 0;
    std::size_t preserve_checks = 0;
    std::size_t reflect_checks = 0;
};

/// The pre-adjunction between b-uniform hypergraphs and one-letter
/// parameter words.  Downward, a hypergraph A with m downsets goes to the
/// object m; upward, a word length n goes to the target G(n) on the
/// subsets of {1..n}.  phi turns a word u into an embedding A into G(n) by
/// sending vertex i to the union of the variable blocks of u indexed by
/// the downsets containing i; lift turns an embedding f: B into A into a
/// word h with phi(A,u) . f == phi(B, u.h) for every u.
class PreAdjunction {
public:
    explicit PreAdjunction(int b, Limits limits = {}) : b_(b), limits_(limits) {
        if (b < 2) throw Error(Errc::InvalidArgument, "edge size must be at least 2", b);
    }

    int edge_size() const { return b_; }

    int downset_count(const Hypergraph& h) const {
        require(h);
        return downset_count_F(h);
    }

    GrTarget target(int n) const { return gr_target_hypergraph(n, b_, limits_); }

    Embedding phi(const Hypergraph& a, const GrTarget& tgt, const ParamWord& u,
                  PhiAudit* audit = nullptr) const {
        require(a);
        if (tgt.graph.edge_size() != b_)
            throw Error(Errc::KindMismatch, "target has foreign edge size",
                        tgt.graph.edge_size(), b_);
        if (u.alphabet() != zero_alphabet())
            throw Error(Errc::InvalidArgument, "word is not over the one-letter alphabet");
        if (u.length() != tgt.ground_n)
            throw Error(Errc::ArityMismatch, "word length differs from target ground set",
                        u.length(), tgt.ground_n);
        const std::vector<IntSet> downs = downsets(a);
        if (u.arity() != static_cast<int>(downs.size()))
            throw Error(Errc::ArityMismatch, "word arity differs from downset count", u.arity(),
                        static_cast<long>(downs.size()));

        const std::vector<IntSet> blocks = u.variable_blocks();
        std::vector<IntSet> image_sets(a.size());
        for (int i = 1; i <= a.size(); ++i) {
            IntSet acc;
            for (std::size_t alpha = 0; alpha < downs.size(); ++alpha)
                if (std::binary_search(downs[alpha].begin(), downs[alpha].end(), i))
                    acc.insert(acc.end(), blocks[alpha].begin(), blocks[alpha].end());
            std::sort(acc.begin(), acc.end());
            image_sets[i - 1] = std::move(acc);
        }

        std::vector<int> map(a.size());
        for (int i = 1; i <= a.size(); ++i) map[i - 1] = tgt.vertex_of(image_sets[i - 1]);

        // The three correctness checks from the construction, asserted at
        // runtime; a failure is a bug, never an expected outcome.
        for (std::size_t i = 1; i < map.size(); ++i) {
            if (audit) ++audit->order_checks;
            if (map[i - 1] >= map[i])
                throw Error(Errc::NotAnEmbedding, "image does not respect the vertex order");
        }
        for (const IntSet& e : a.edges()) {
            if (audit) ++audit->preserve_checks;
            IntSet common = image_sets[e.front() - 1];
            for (int v : e) {
                IntSet next;
                std::set_intersection(common.begin(), common.end(),
                                      image_sets[v - 1].begin(), image_sets[v - 1].end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
            if (common.empty())
                throw Error(Errc::NotAnEmbedding, "image of an edge misses the target edge set");
        }
        // Reflection: a target edge inside the image must come from an edge.
        if (a.size() >= b_) {
            std::vector<int> pick(b_);
            auto sweep = [&](auto&& self, int depth, int from) -> void {
                if (depth == b_) {
                    if (audit) ++audit->reflect_checks;
                    IntSet common = image_sets[pick[0] - 1];
                    for (int v : pick) {
                        IntSet next;
                        std::set_intersection(common.begin(), common.end(),
                                              image_sets[v - 1].begin(),
                                              image_sets[v - 1].end(),
                                              std::back_inserter(next));
                        common = std::move(next);
                    }
                    if (!common.empty()) {
                        IntSet verts(pick.begin(), pick.end());
                        if (!a.has_edge(verts))
                            throw Error(Errc::NotAnEmbedding,
                                        "target edge inside the image has no source edge");
                    }
                    return;
                }
                for (int v = from; v <= a.size(); ++v) {
                    pick[depth] = v;
                    self(self, depth + 1, v + 1);
                }
            };
            sweep(sweep, 0, 1);
        }
        return Embedding{std::move(map), tgt.graph.size()};
    }

    Embedding phi(const Hypergraph& a, int n, const ParamWord& u,
                  PhiAudit* audit = nullptr) const {
        return phi(a, target(n), u, audit);
    }

    /// The lifted word for f: B into A.  Position i holds x_j when the
    /// f-preimage of the i-th downset of A is the j-th downset of B, and
    /// the letter otherwise.  Validation of the result re-proves the
    /// first-occurrence property at runtime.
    ParamWord lift(const Hypergraph& a, const Hypergraph& b, const Embedding& f) const {
        require(a);
        require(b);
        if (!is_embedding(b, a, f))
            throw Error(Errc::NotAnEmbedding, "lift needs an embedding into the larger object");
        const std::vector<IntSet> downs_a = downsets(a);
        const std::vector<IntSet> downs_b = downsets(b);
        std::map<IntSet, int> rank_b;
        for (std::size_t j = 0; j < downs_b.size(); ++j)
            rank_b.emplace(downs_b[j], static_cast<int>(j) + 1);

        std::vector<PwSymbol> symbols;
        symbols.reserve(downs_a.size());
        for (const IntSet& d : downs_a) {
            IntSet preimage;
            for (int v = 1; v <= b.size(); ++v)
                if (std::binary_search(d.begin(), d.end(), f.map[v - 1])) preimage.push_back(v);
            const auto it = rank_b.find(preimage);
            if (it != rank_b.end())
                symbols.push_back(PwSymbol::variable(it->second));
            else
                symbols.push_back(PwSymbol::letter(0));
        }
        return ParamWord::validate(zero_alphabet(), static_cast<int>(downs_a.size()),
                                   static_cast<int>(downs_b.size()), std::move(symbols));
    }

private:
    void require(const Hypergraph& h) const {
        if (h.edge_size() != b_)
            throw Error(Errc::KindMismatch, "hypergraph has foreign edge size", h.edge_size(),
                        b_);
    }

    int b_;
    Limits limits_;
};

inline Embedding phi(const Hypergraph& a, int n, const ParamWord& u, PhiAudit* audit = nullptr) {
    return PreAdjunction(a.edge_size()).phi(a, n, u, audit);
}

inline ParamWord lift_word(const Embedding& f, const Hypergraph& a, const Hypergraph& b) {
    return PreAdjunction(a.edge_size()).lift(a, b, f);
}

/// The transfer along the pre-adjunction: a witnessed word arrow
///   n -> (F(D))^{F(E)}_k
/// makes G(n) witness the hypergraph arrow G(n) -> (D)^E_k, and any
/// k-coloring of hom(E, G(n)) decodes to a concrete witness: pull the
/// coloring back through phi, take a monochromatic word u from the word
/// arrow, return phi(D, u).
class PreAdjunctionTransfer {
public:
    PreAdjunctionTransfer(PreAdjunction pa, Hypergraph bottom, Hypergraph top, int n,
                          const ArrowReport& word_witness, int k, Limits limits = {})
        : pa_(pa), bottom_(std::move(bottom)), top_(std::move(top)), n_(n), k_(k),
          limits_(limits), target_(pa.target(n)), hyper_(pa.edge_size(), limits) {
        if (word_witness.verdict != ArrowReport::Verdict::Witnessed || word_witness.colors != k)
            throw Error(Errc::ComponentArrowUnverified, "word arrow not witnessed");
        const int fe = pa_.downset_count(bottom_);
        const int fd = pa_.downset_count(top_);
        GrCategory words(zero_alphabet(), limits_);
        words_ = make_arrow_instance(words, fe, fd, n_);
        if (words_.hom_ab.empty())
            throw Error(Errc::NoEmbedding, "no words from the bottom count to the top count");

        hom_ec_ = hyper_.hom(bottom_, target_.graph);
        for (std::size_t i = 0; i < hom_ec_.size(); ++i)
            index_ec_.emplace(hom_ec_[i].key(), static_cast<int>(i));
        hom_ed_ = hyper_.hom(bottom_, top_);
        if (hom_ed_.empty())
            throw Error(Errc::NoEmbedding, "bottom object does not embed into the top object");

        // phi image of every word position, computed once.
        phi_of_word_.reserve(words_.hom_ac.size());
        for (const ParamWord& u : words_.hom_ac)
            phi_of_word_.push_back(position_of(pa_.phi(bottom_, target_, u)));
    }

    const GrTarget& target() const { return target_; }
    const std::vector<Embedding>& hom_bottom_target() const { return hom_ec_; }
    std::size_t positions() const { return hom_ec_.size(); }

    struct Decoded {
        std::size_t word_witness = 0;  // index into hom_GR(F(D), n)
        Embedding witness;             // phi(D, that word): D into G(n)
        int color = 0;
    };

    /// Runs the constructive decoding on a k-coloring of hom(E, G(n)) and
    /// verifies the decoded copy is monochromatic.
    Decoded decode(const Coloring& chi) const {
        if (chi.size() != positions())
            throw Error(Errc::InvalidArgument, "coloring length mismatch",
                        static_cast<long>(chi.size()), static_cast<long>(positions()));
        Coloring word_coloring(words_.hom_ac.size());
        for (std::size_t i = 0; i < word_coloring.size(); ++i)
            word_coloring[i] = chi[phi_of_word_[i]];

        std::size_t chosen = words_.hom_bc.size();
        for (std::size_t w = 0; w < words_.hom_bc.size(); ++w)
            if (is_monochromatic(words_.copies[w], word_coloring)) {
                chosen = w;
                break;
            }
        if (chosen == words_.hom_bc.size())
            throw Error(Errc::ComponentArrowUnverified,
                        "no monochromatic word for the pulled-back coloring");

        Decoded out;
        out.word_witness = chosen;
        out.witness = pa_.phi(top_, target_, words_.hom_bc[chosen]);
        out.color = word_coloring[words_.copies[chosen].front()];
        for (const Embedding& g : hom_ed_) {
            const int p = position_of(compose_embeddings(out.witness, g));
            if (chi[p] != out.color)
                throw Error(Errc::PreAdjunctionViolated,
                            "decoded witness is not monochromatic");
        }
        return out;
    }

    /// Direct verification of the transferred arrow G(n) -> (D)^E_k.
    ArrowReport verify(SearchMode mode) const {
        return verify_arrow(hyper_, bottom_, top_, target_.graph, k_, mode, limits_);
    }

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
    int position_of(const Embedding& e) const {
        const auto it = index_ec_.find(e.key());
        if (it == index_ec_.end())
            throw Error(Errc::NotAnEmbedding, "image escapes the enumerated hom set");
        return it->second;
    }

    PreAdjunction pa_;
    Hypergraph bottom_;
    Hypergraph top_;
    int n_;
    int k_;
    Limits limits_;
    GrTarget target_;
    HyperCategory hyper_;
    ArrowInstance<GrCategory> words_;
    std::vector<Embedding> hom_ec_;
    std::unordered_map<std::string, int> index_ec_;
    std::vector<Embedding> hom_ed_;
    std::vector<int> phi_of_word_;
};

}  // namespace ramsey
