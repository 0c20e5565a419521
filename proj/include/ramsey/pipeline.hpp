#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/category.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/diagram.hpp"
#include "ramsey/encode.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/preadjunction.hpp"
#include "ramsey/product.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

struct PipelineOptions {
    int k = 2;
    Limits limits{};
    SearchMode mode = SearchMode::Backtrack;
    std::uint64_t seed = 0;
    std::uint64_t samples = 32;
    int ground_window = 12;  // candidate targets tried above the minimum
};

struct PipelineStage {
    std::string name;
    std::string status;        // done | budget | rejected
    std::string verification;  // exhaustive | sampled(S) | budget-exceeded
    std::string note;
    Json detail = Json::object();
};

/// Trace of the staged witness construction.  A completed run carries the
/// final witness; an aborted run carries the trace up to and including
/// the failing stage.
struct PipelineResult {
    std::vector<PipelineStage> trace;
    std::optional<OrderedStructure> witness;
    bool completed = false;

    std::string overall_verification() const {
        std::string v = verification_exhaustive();
        for (const PipelineStage& s : trace) v = weaker_verification(v, s.verification);
        return v;
    }
};

namespace detail {

inline std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
    if (r < 0 || r > n) return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
        if (out > cap) return cap + 1;
    }
    return out;
}

/// Direct check of the transferred arrow where feasible, sampled decoding
/// otherwise.  Returns the verification label; throws when even sampling
/// finds a coloring without a monochromatic copy.
template <typename VerifyFn, typename SampleFn>
std::string verify_or_sample(VerifyFn&& verify, SampleFn&& sample, Json* report_out) {
    const ArrowReport direct = verify();
    if (report_out) *report_out = to_json(direct);
    if (direct.verdict == ArrowReport::Verdict::Witnessed) return verification_exhaustive();
    if (direct.verdict == ArrowReport::Verdict::Refuted)
        throw Error(Errc::ComponentArrowUnverified, "transferred arrow refuted by direct check");
    const SampleReport sampled = sample();
    if (!sampled.ok)
        throw Error(Errc::ComponentArrowUnverified, "sampled coloring failed to decode");
    return verification_sampled(sampled.seed);
}

}  // namespace detail

/// Staged construction of a Ramsey witness for structures over a joint
/// signature: encode with order types, drop redundant symbols, bridge the
/// single-symbol slices to hypergraphs, find parameter-word witnesses,
/// transfer back through the downset construction, combine via products
/// and the diagonal closure, then undo the encoding.  Stages that exceed
/// the configured budget abort the trace; the trace is the deliverable
/// either way.
inline PipelineResult nesetril_rodl_pipeline(const OrderedStructure& a,
                                             const OrderedStructure& b,
                                             const PipelineOptions& opt = {}) {
    if (a.signature() != b.signature())
        throw Error(Errc::SignatureMismatch, "inputs over different signatures");
    if (opt.k < kMinColors || opt.k > kMaxColors)
        throw Error(Errc::InvalidArgument, "color count out of range", opt.k);
    if (enumerate_embeddings(a, b, opt.limits.hom_cap).empty())
        throw Error(Errc::NoEmbedding, "bottom object does not embed into the top object");

    PipelineResult result;
    const auto done = [&](std::string name, Json detail, std::string verification,
                          std::string note = "") {
        result.trace.push_back({std::move(name), "done", std::move(verification),
                                std::move(note), std::move(detail)});
    };
    const auto abort_stage = [&](std::string name, std::string status, std::string note,
                                 Json detail = Json::object()) -> PipelineResult {
        result.trace.push_back({std::move(name), std::move(status), verification_budget(),
                                std::move(note), std::move(detail)});
        return std::move(result);
    };

    // Recode every relation by order type; the recoded structures are
    // absolutely ordered and the recoding is invertible.
    const OrderedStructure ad = dagger(a);
    const OrderedStructure bd = dagger(b);
    if (!(star(ad, a.signature()) == a) || !(star(bd, b.signature()) == b))
        throw Error(Errc::ClassCountMismatch, "encoding round trip failed");
    done("encode-absolute",
         Json{{"bottom", to_json(ad)}, {"top", to_json(bd)}, {"symbols", ad.signature().count()}},
         verification_exhaustive());

    // Drop symbols that are empty or duplicated in the top object; the
    // bottom object must agree, which is implied by the embedding.
    const SigmaReduction red = sigma_reduce(bd);
    check_reduction_on(red, ad);
    const OrderedStructure a2 = ad.reduct(red.sigma);
    const OrderedStructure b2 = bd.reduct(red.sigma);
    {
        Json fates = Json::array();
        for (std::size_t s = 0; s < red.fate.size(); ++s) {
            const char* f = red.fate[s] == SigmaReduction::Fate::Kept    ? "kept"
                            : red.fate[s] == SigmaReduction::Fate::Alias ? "alias"
                                                                         : "empty";
            fates.push_back(Json{{"symbol", ad.signature().names[s]},
                                 {"fate", f},
                                 {"alias", red.alias[s]}});
        }
        done("signature-reduce", Json{{"kept", red.sigma}, {"fates", std::move(fates)}},
             verification_exhaustive());
    }

    OrderedStructure cstar(ad.signature(), 0, std::vector<std::vector<Tuple>>(
                                                  static_cast<std::size_t>(ad.signature().count())));
    if (red.empty()) {
        // No relations survive: the instance is an order instance and a
        // chain witness suffices.
        ChainCategory chains(opt.limits);
        std::vector<int> candidates;
        for (int n = std::max(b.size(), 1); n <= 64; ++n) {
            if (detail::binomial_capped(n, a.size(),
                                        static_cast<std::uint64_t>(opt.limits.arrow_positions)) >
                static_cast<std::uint64_t>(opt.limits.arrow_positions))
                break;
            candidates.push_back(n);
        }
        const auto search =
            search_witness(chains, a.size(), b.size(), opt.k, candidates, opt.mode, opt.limits);
        if (search.status != WitnessSearch<ChainCategory>::Status::Found)
            return abort_stage("order-witness", "budget",
                              "no chain witness within the candidate window",
                              Json{{"attempts", search.attempts.size()}});
        done("order-witness",
             Json{{"object", *search.object}, {"report", to_json(search.report)}},
             verification_exhaustive());
        cstar = expand_witness(
            OrderedStructure(Signature({}, {}), *search.object, {}), red, ad.signature());
        done("signature-expand", Json{{"object", to_json(cstar)}}, verification_exhaustive());
    } else {
        // Bridge each surviving symbol to a uniform hypergraph.
        const Signature& kept = a2.signature();
        std::vector<Hypergraph> bottoms, tops;
        {
            Json slices_detail = Json::array();
            for (int s = 0; s < kept.count(); ++s) {
                if (kept.arities[s] < 2)
                    return abort_stage("hypergraph-bridge", "rejected",
                                       "symbol '" + kept.names[s] +
                                           "' has arity 1; no hypergraph form exists",
                                       Json{{"symbol", kept.names[s]}});
                bottoms.push_back(structure_to_hypergraph(a2.reduct({kept.names[s]})));
                tops.push_back(structure_to_hypergraph(b2.reduct({kept.names[s]})));
                slices_detail.push_back(Json{{"symbol", kept.names[s]},
                                             {"edge_size", kept.arities[s]},
                                             {"bottom", to_json(bottoms.back())},
                                             {"top", to_json(tops.back())}});
            }
            done("hypergraph-bridge", Json{{"slices", std::move(slices_detail)}},
                 verification_exhaustive());
        }

        // One parameter-word witness per slice.  Later slices need the
        // escalated color count of the product argument; the escalation
        // leaves the supported color range almost immediately, which is a
        // reported budget outcome, not an error.
        GrCategory words(zero_alphabet(), opt.limits);
        std::vector<int> grounds(bottoms.size());
        std::vector<int> slice_colors(bottoms.size());
        std::vector<ArrowReport> word_reports(bottoms.size());
        {
            Json search_detail = Json::array();
            std::uint64_t colors = static_cast<std::uint64_t>(opt.k);
            for (std::size_t s = 0; s < bottoms.size(); ++s) {
                if (colors > static_cast<std::uint64_t>(kMaxColors))
                    return abort_stage(
                        "parameter-witness", "budget",
                        "color escalation exceeds the supported color range",
                        Json{{"slice", s}, {"colors", colors}});
                slice_colors[s] = static_cast<int>(colors);
                const int fa = downset_count_F(bottoms[s]);
                const int fb = downset_count_F(tops[s]);
                std::vector<int> candidates;
                for (int n = fb; n <= fb + opt.ground_window; ++n) candidates.push_back(n);
                const auto search = search_witness(words, fa, fb, slice_colors[s], candidates,
                                                   opt.mode, opt.limits);
                if (search.status != WitnessSearch<GrCategory>::Status::Found) {
                    search_detail.push_back(Json{{"symbol", kept.names[s]},
                                                 {"attempts", search.attempts.size()}});
                    return abort_stage("parameter-witness", "budget",
                                       "no parameter-word witness within caps for symbol '" +
                                           kept.names[s] + "'",
                                       Json{{"slices", std::move(search_detail)}});
                }
                grounds[s] = *search.object;
                word_reports[s] = search.report;
                search_detail.push_back(Json{{"symbol", kept.names[s]},
                                             {"colors", slice_colors[s]},
                                             {"ground", grounds[s]},
                                             {"report", to_json(search.report)}});
                if (s + 1 < bottoms.size()) {
                    // t = number of bottom copies in this slice's target.
                    PreAdjunction pa(tops[s].edge_size(), opt.limits);
                    HyperCategory hyper(tops[s].edge_size(), opt.limits);
                    std::size_t t = 0;
                    try {
                        t = hyper.hom(bottoms[s], pa.target(grounds[s]).graph).size();
                    } catch (const Error& e) {
                        if (e.code() != Errc::SizeLimitExceeded) throw;
                        return abort_stage("parameter-witness", "budget",
                                           "hom enumeration exceeds cap during color escalation",
                                           Json{{"slices", std::move(search_detail)}});
                    }
                    try {
                        colors = checked_pow(colors, t, static_cast<std::uint64_t>(kMaxColors));
                    } catch (const Error&) {
                        colors = static_cast<std::uint64_t>(kMaxColors) + 1;
                    }
                }
            }
            done("parameter-witness", Json{{"slices", std::move(search_detail)}},
                 verification_exhaustive());
        }

        // Pull each word witness back to a hypergraph witness.
        std::vector<OrderedStructure> apexes;
        std::vector<Hypergraph> apex_graphs;
        {
            Json transfer_detail = Json::array();
            std::string stage_verification = verification_exhaustive();
            for (std::size_t s = 0; s < bottoms.size(); ++s) {
                try {
                    PreAdjunction pa(tops[s].edge_size(), opt.limits);
                    const PreAdjunctionTransfer tr(pa, bottoms[s], tops[s], grounds[s],
                                                   word_reports[s], slice_colors[s], opt.limits);
                    Json report;
                    const std::string v = detail::verify_or_sample(
                        [&] { return tr.verify(opt.mode); },
                        [&] { return tr.sampled_verify(opt.samples, opt.seed); }, &report);
                    stage_verification = weaker_verification(stage_verification, v);
                    apex_graphs.push_back(tr.target().graph);
                    apexes.push_back(hypergraph_to_structure(tr.target().graph, kept.names[s]));
                    transfer_detail.push_back(Json{{"symbol", kept.names[s]},
                                                   {"target", to_json(tr.target().graph)},
                                                   {"report", std::move(report)}});
                } catch (const Error& e) {
                    if (e.code() != Errc::SizeLimitExceeded) throw;
                    return abort_stage("preadjunction-transfer", "budget",
                                       "transfer instance exceeds caps for symbol '" +
                                           kept.names[s] + "'",
                                       Json{{"slices", std::move(transfer_detail)}});
                }
            }
            done("preadjunction-transfer", Json{{"slices", std::move(transfer_detail)}},
                 stage_verification);
        }

        // Combine slice witnesses into a product witness.
        if (bottoms.size() == 1) {
            done("product-witness", Json{{"components", 1}}, verification_exhaustive(),
                 "single component; the product is the slice itself");
        } else if (bottoms.size() == 2) {
            try {
                HyperCategory h1(tops[0].edge_size(), opt.limits);
                HyperCategory h2(tops[1].edge_size(), opt.limits);
                // The product argument needs the transferred hypergraph
                // arrows, re-verified on the targets directly.
                ArrowReport w1 = verify_arrow(h1, bottoms[0], tops[0], apex_graphs[0],
                                              slice_colors[0], opt.mode, opt.limits);
                ArrowReport w2 = verify_arrow(h2, bottoms[1], tops[1], apex_graphs[1],
                                              slice_colors[1], opt.mode, opt.limits);
                if (w1.verdict != ArrowReport::Verdict::Witnessed ||
                    w2.verdict != ArrowReport::Verdict::Witnessed)
                    return abort_stage("product-witness", "budget",
                                       "component arrows not directly verifiable within caps");
                const ProductTransfer<HyperCategory, HyperCategory> pt(
                    h1, bottoms[0], tops[0], apex_graphs[0], w1, h2, bottoms[1], tops[1],
                    apex_graphs[1], w2, opt.k);
                Json report;
                const std::string v = detail::verify_or_sample(
                    [&] { return pt.verify(opt.mode, opt.limits); },
                    [&] { return pt.sampled_verify(opt.samples, opt.seed); }, &report);
                done("product-witness", Json{{"components", 2}, {"report", std::move(report)}},
                     v);
            } catch (const Error& e) {
                if (e.code() != Errc::SizeLimitExceeded) throw;
                return abort_stage("product-witness", "budget",
                                   "product instance exceeds caps");
            }
        } else {
            return abort_stage("product-witness", "budget",
                               "product combination beyond two components is out of budget",
                               Json{{"components", bottoms.size()}});
        }

        // Close the coincidence diagram over the diagonal.
        try {
            const SubcategoryTransfer sub(kept, a2, b2, apexes, opt.k, opt.limits);
            Json report;
            const std::string v = detail::verify_or_sample(
                [&] { return sub.verify(opt.mode); },
                [&] { return sub.sampled_verify(opt.samples, opt.seed); }, &report);
            done("diagonal-closure",
                 Json{{"object", to_json(sub.witness_object())},
                      {"arrows", sub.diagram().arrows.size()},
                      {"report", std::move(report)}},
                 v);
            cstar = expand_witness(sub.witness_object(), red, ad.signature());
        } catch (const Error& e) {
            if (e.code() != Errc::SizeLimitExceeded) throw;
            return abort_stage("diagonal-closure", "budget", "closure exceeds caps");
        }
        done("signature-expand", Json{{"object", to_json(cstar)}}, verification_exhaustive());
    }

    // Undo the order-type encoding and check the final arrow directly.
    const OrderedStructure cfinal = star(cstar, a.signature());
    if (!(dagger(cfinal) == cstar))
        throw Error(Errc::ClassCountMismatch, "decoding round trip failed");
    RelCategory rel(a.signature(), opt.limits);
    try {
        Json report;
        const std::string v = detail::verify_or_sample(
            [&] { return verify_arrow(rel, a, b, cfinal, opt.k, opt.mode, opt.limits); },
            [&] {
                const auto inst = make_arrow_instance(rel, a, b, cfinal);
                return sample_colorings_admit(inst.copies, inst.positions(), opt.k,
                                              opt.samples, opt.seed);
            },
            &report);
        done("decode-order", Json{{"witness", to_json(cfinal)}, {"report", std::move(report)}},
             v);
    } catch (const Error& e) {
        if (e.code() != Errc::SizeLimitExceeded) throw;
        return abort_stage("decode-order", "budget",
                           "final arrow instance exceeds caps; witness unverified",
                           Json{{"witness", to_json(cfinal)}});
    }
    result.witness = cfinal;
    result.completed = true;
    return result;
}

}  // namespace ramsey
