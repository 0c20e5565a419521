#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/category.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/diagram.hpp"
#include "ramsey/encode.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/pipeline.hpp"
#include "ramsey/preadjunction.hpp"
#include "ramsey/product.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

/// Exit-code contract shared by the commands:
///   0 witnessed / certificate written and replayed,
///   1 refuted / certificate does not replay,
///   2 budget exceeded / certificate claims more than the caps can replay,
///   3 malformed input,
///   4 usage error,
///   5 stage error (well-formed input that the stage rejects).
enum ExitCode : int {
    kExitWitnessed = 0,
    kExitRefuted = 1,
    kExitBudget = 2,
    kExitMalformed = 3,
    kExitUsage = 4,
    kExitStage = 5,
};

struct RunConfig {
    Limits limits{};
    SearchMode mode = SearchMode::Backtrack;
    std::uint64_t seed = 0;
    std::uint64_t samples = 32;
    int ground_window = 12;
};

inline Json to_json(const RunConfig& cfg) {
    return Json{{"cap_hom", cfg.limits.hom_cap},
                {"cap_positions", cfg.limits.arrow_positions},
                {"cap_colorings", cfg.limits.coloring_cap},
                {"cap_nodes", cfg.limits.node_cap},
                {"jobs", cfg.limits.jobs},
                {"mode", mode_name(cfg.mode)},
                {"seed", cfg.seed},
                {"samples", cfg.samples},
                {"ground_window", cfg.ground_window}};
}

inline RunConfig run_config_from_json(const Json& j) {
    RunConfig cfg;
    cfg.limits.hom_cap = detail::field(j, "cap_hom").get<std::size_t>();
    cfg.limits.arrow_positions = detail::field(j, "cap_positions").get<std::size_t>();
    cfg.limits.coloring_cap = detail::field(j, "cap_colorings").get<std::uint64_t>();
    cfg.limits.node_cap = detail::field(j, "cap_nodes").get<std::uint64_t>();
    cfg.limits.jobs = detail::field(j, "jobs").get<int>();
    cfg.mode = mode_from_name(detail::field(j, "mode").get<std::string>());
    cfg.seed = detail::field(j, "seed").get<std::uint64_t>();
    cfg.samples = detail::field(j, "samples").get<std::uint64_t>();
    cfg.ground_window = detail::field(j, "ground_window").get<int>();
    return cfg;
}

struct CommandResult {
    int exit_code = kExitWitnessed;
    Json output = Json::object();
};

namespace detail {

inline Json error_json(const Error& e) {
    return Json{{"error", e.what()}};
}

}  // namespace detail

/// Decides the arrow C -> (B)^A_k for three same-kind objects.  The
/// verdict is the exit code; the report is the output either way.
inline CommandResult cmd_verify(const Json& ja, const Json& jb, const Json& jc, int k,
                                const RunConfig& cfg) {
    AnyObject a, b, c;
    try {
        a = AnyObject::from_json(ja);
        b = AnyObject::from_json(jb);
        c = AnyObject::from_json(jc);
    } catch (const Error& e) {
        return {kExitMalformed, detail::error_json(e)};
    }
    if (a.kind != b.kind || a.kind != c.kind)
        return {kExitUsage, Json{{"error", "objects have different kinds"}}};

    ArrowReport report;
    try {
        switch (a.kind) {
            case AnyObject::Kind::Chain: {
                ChainCategory cat(cfg.limits);
                report = verify_arrow(cat, a.number, b.number, c.number, k, cfg.mode, cfg.limits);
                break;
            }
            case AnyObject::Kind::Gr: {
                GrCategory cat(zero_alphabet(), cfg.limits);
                report = verify_arrow(cat, a.number, b.number, c.number, k, cfg.mode, cfg.limits);
                break;
            }
            case AnyObject::Kind::Hypergraph: {
                if (a.graph->edge_size() != b.graph->edge_size() ||
                    a.graph->edge_size() != c.graph->edge_size())
                    return {kExitUsage, Json{{"error", "hypergraphs have different edge sizes"}}};
                HyperCategory cat(a.graph->edge_size(), cfg.limits);
                report = verify_arrow(cat, *a.graph, *b.graph, *c.graph, k, cfg.mode, cfg.limits);
                break;
            }
            case AnyObject::Kind::Rel: {
                if (!(a.rel->signature() == b.rel->signature()) ||
                    !(a.rel->signature() == c.rel->signature()))
                    return {kExitUsage, Json{{"error", "structures have different signatures"}}};
                RelCategory cat(a.rel->signature(), cfg.limits);
                report = verify_arrow(cat, *a.rel, *b.rel, *c.rel, k, cfg.mode, cfg.limits);
                break;
            }
        }
    } catch (const Error& e) {
        if (e.code() == Errc::SizeLimitExceeded) {
            // Instance too large to even enumerate: a budget verdict.
            report.colors = k;
            report.mode = cfg.mode;
            report.note = "hom enumeration exceeds cap";
            return {kExitBudget, to_json(report)};
        }
        if (e.code() == Errc::InvalidArgument || e.code() == Errc::NoEmbedding)
            return {kExitUsage, detail::error_json(e)};
        throw;
    }

    int exit = kExitBudget;
    if (report.verdict == ArrowReport::Verdict::Witnessed) exit = kExitWitnessed;
    if (report.verdict == ArrowReport::Verdict::Refuted) exit = kExitRefuted;
    return {exit, to_json(report)};
}

namespace detail {

struct StageOutput {
    Json construction;
    std::string verification;
};

inline StageOutput stage_dagger(const Json& values, const RunConfig&) {
    const OrderedStructure s = structure_from_json(field(values, "structure"));
    const OrderedStructure enc = dagger(s);
    const OrderedStructure back = star(enc, s.signature());
    if (!(back == s)) throw Error(Errc::ClassCountMismatch, "encoding round trip failed");
    return {Json{{"encoded", to_json(enc)},
                 {"restored", to_json(back)},
                 {"restored_hash", hash_of(to_json(back))}},
            verification_exhaustive()};
}

inline StageOutput stage_star(const Json& values, const RunConfig&) {
    const OrderedStructure s = structure_from_json(field(values, "structure"));
    const Signature base = signature_from_json(field(values, "base"));
    const OrderedStructure dec = star(s, base);
    const OrderedStructure reenc = dagger(dec);
    if (!(reenc == s)) throw Error(Errc::ClassCountMismatch, "decoding round trip failed");
    return {Json{{"decoded", to_json(dec)},
                 {"reencoded_hash", hash_of(to_json(reenc))}},
            verification_exhaustive()};
}

inline StageOutput stage_sigma_reduce(const Json& values, const RunConfig&) {
    const OrderedStructure s = structure_from_json(field(values, "structure"));
    const SigmaReduction red = sigma_reduce(s);
    Json fates = Json::array();
    for (std::size_t i = 0; i < red.fate.size(); ++i) {
        const char* f = red.fate[i] == SigmaReduction::Fate::Kept    ? "kept"
                        : red.fate[i] == SigmaReduction::Fate::Alias ? "alias"
                                                                     : "empty";
        fates.push_back(Json{{"symbol", s.signature().names[i]},
                             {"fate", f},
                             {"alias", red.alias[i]}});
    }
    return {Json{{"kept", red.sigma},
                 {"fates", std::move(fates)},
                 {"reduct", to_json(s.reduct(red.sigma))}},
            verification_exhaustive()};
}

inline StageOutput stage_phi(const Json& values, const RunConfig& cfg) {
    const Hypergraph a = hypergraph_from_json(field(values, "graph"));
    const ParamWord u = word_from_json(field(values, "word"));
    PreAdjunction pa(a.edge_size(), cfg.limits);
    const GrTarget tgt = pa.target(u.length());
    const Embedding e = pa.phi(a, tgt, u);
    return {Json{{"embedding", to_json(e)}, {"target", to_json(tgt.graph)}},
            verification_exhaustive()};
}

inline StageOutput stage_lift(const Json& values, const RunConfig& cfg) {
    const Hypergraph bottom = hypergraph_from_json(field(values, "bottom"));
    const Hypergraph top = hypergraph_from_json(field(values, "top"));
    const Embedding f = embedding_from_json(field(values, "embedding"));
    PreAdjunction pa(bottom.edge_size(), cfg.limits);
    // f embeds the bottom object into the top one; the lifted word lives
    // in hom(F(bottom), F(top)).
    return {Json{{"word", to_json(pa.lift(top, bottom, f))}}, verification_exhaustive()};
}

/// Label plus report for a direct-else-sampled transfer verification.
template <typename VerifyFn, typename SampleFn>
StageOutput transfer_verified(Json construction, VerifyFn&& verify, SampleFn&& sample) {
    Json report;
    const std::string v =
        ramsey::detail::verify_or_sample(std::forward<VerifyFn>(verify),
                                         std::forward<SampleFn>(sample), &report);
    construction["report"] = std::move(report);
    return {std::move(construction), v};
}

inline StageOutput stage_product(const Json& values, const RunConfig& cfg) {
    const Json& jf = field(values, "first");
    const Json& js = field(values, "second");
    const int k = field(values, "colors").get<int>();
    const Hypergraph a1 = hypergraph_from_json(field(jf, "bottom"));
    const Hypergraph b1 = hypergraph_from_json(field(jf, "top"));
    const Hypergraph c1 = hypergraph_from_json(field(jf, "apex"));
    const Hypergraph a2 = hypergraph_from_json(field(js, "bottom"));
    const Hypergraph b2 = hypergraph_from_json(field(js, "top"));
    const Hypergraph c2 = hypergraph_from_json(field(js, "apex"));
    HyperCategory h1(b1.edge_size(), cfg.limits);
    HyperCategory h2(b2.edge_size(), cfg.limits);

    const ArrowReport w1 = verify_arrow(h1, a1, b1, c1, k, cfg.mode, cfg.limits);
    if (w1.verdict == ArrowReport::Verdict::Refuted)
        throw Error(Errc::ComponentArrowUnverified, "first component arrow refuted");
    if (w1.verdict == ArrowReport::Verdict::BudgetExceeded)
        return {Json{{"first_report", to_json(w1)}}, verification_budget()};

    const std::uint64_t t = h1.hom(a1, c1).size();
    std::uint64_t k2 = 0;
    try {
        k2 = checked_pow(static_cast<std::uint64_t>(k), t,
                         static_cast<std::uint64_t>(kMaxColors));
    } catch (const Error&) {
        return {Json{{"first_report", to_json(w1)}, {"t", t}},
                verification_budget()};
    }
    const ArrowReport w2 =
        verify_arrow(h2, a2, b2, c2, static_cast<int>(k2), cfg.mode, cfg.limits);
    if (w2.verdict == ArrowReport::Verdict::Refuted)
        throw Error(Errc::ComponentArrowUnverified, "second component arrow refuted");
    if (w2.verdict == ArrowReport::Verdict::BudgetExceeded)
        return {Json{{"first_report", to_json(w1)},
                     {"second_report", to_json(w2)},
                     {"t", t},
                     {"colors_second", k2}},
                verification_budget()};

    const ProductTransfer<HyperCategory, HyperCategory> pt(h1, a1, b1, c1, w1, h2, a2, b2, c2,
                                                           w2, k);
    return transfer_verified(
        Json{{"first_report", to_json(w1)},
             {"second_report", to_json(w2)},
             {"t", t},
             {"colors_second", k2}},
        [&] { return pt.verify(cfg.mode, cfg.limits); },
        [&] { return pt.sampled_verify(cfg.samples, cfg.seed); });
}

inline StageOutput stage_closure(const Json& values, const RunConfig& cfg) {
    const OrderedStructure a = structure_from_json(field(values, "bottom"));
    const OrderedStructure b = structure_from_json(field(values, "top"));
    const int k = field(values, "colors").get<int>();
    std::vector<OrderedStructure> apexes;
    for (const Json& ja : field(values, "apexes")) apexes.push_back(structure_from_json(ja));
    const SubcategoryTransfer sub(a.signature(), a, b, apexes, k, cfg.limits);
    return transfer_verified(
        Json{{"object", to_json(sub.witness_object())},
             {"top_copies", sub.diagram().top_count},
             {"arrows", sub.diagram().arrows.size()}},
        [&] { return sub.verify(cfg.mode); },
        [&] { return sub.sampled_verify(cfg.samples, cfg.seed); });
}

inline StageOutput stage_pipeline(const Json& values, const RunConfig& cfg) {
    const OrderedStructure a = structure_from_json(field(values, "bottom"));
    const OrderedStructure b = structure_from_json(field(values, "top"));
    PipelineOptions opt;
    opt.k = field(values, "colors").get<int>();
    opt.limits = cfg.limits;
    opt.mode = cfg.mode;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.ground_window = cfg.ground_window;
    const PipelineResult result = nesetril_rodl_pipeline(a, b, opt);
    Json trace = Json::array();
    for (const PipelineStage& st : result.trace)
        trace.push_back(Json{{"name", st.name},
                             {"status", st.status},
                             {"verification", st.verification},
                             {"note", st.note},
                             {"detail", st.detail}});
    Json construction{{"trace", std::move(trace)}, {"completed", result.completed}};
    construction["witness"] = result.witness ? to_json(*result.witness) : Json();
    return {std::move(construction), result.overall_verification()};
}

inline StageOutput run_stage(const std::string& stage, const Json& values,
                             const RunConfig& cfg) {
    if (stage == "dagger") return stage_dagger(values, cfg);
    if (stage == "star") return stage_star(values, cfg);
    if (stage == "sigma-reduce") return stage_sigma_reduce(values, cfg);
    if (stage == "phi") return stage_phi(values, cfg);
    if (stage == "lift") return stage_lift(values, cfg);
    if (stage == "product") return stage_product(values, cfg);
    if (stage == "closure") return stage_closure(values, cfg);
    if (stage == "pipeline") return stage_pipeline(values, cfg);
    throw Error(Errc::InvalidArgument, "unknown stage: " + stage);
}

}  // namespace detail

/// Executes one transfer stage and wraps it in a certificate.  The
/// certificate inputs carry the stage values plus the run configuration,
/// so the certificate replays standalone.
inline Json make_transfer_certificate(const std::string& stage, const Json& values,
                                      const RunConfig& cfg) {
    Json inputs = values;
    inputs["config"] = to_json(cfg);
    detail::StageOutput out = detail::run_stage(stage, values, cfg);
    return make_certificate(stage, std::move(inputs), std::move(out.construction),
                            out.verification);
}

inline CommandResult cmd_transfer(const std::string& stage, const Json& values,
                                  const RunConfig& cfg) {
    static const std::vector<std::string> kStages = {
        "phi", "lift", "product", "closure", "dagger", "star", "sigma-reduce", "pipeline"};
    bool known = false;
    for (const auto& s : kStages) known = known || s == stage;
    if (!known) return {kExitUsage, Json{{"error", "unknown stage: " + stage}}};
    try {
        return {kExitWitnessed, make_transfer_certificate(stage, values, cfg)};
    } catch (const Error& e) {
        if (e.code() == Errc::InvalidArgument)
            return {kExitMalformed, detail::error_json(e)};
        return {kExitStage, detail::error_json(e)};
    }
}

/// Replays a certificate from its recorded inputs and configuration and
/// compares byte for byte.  A certificate that differs only by claiming a
/// stronger verification than the replay can reproduce is unreplayable
/// rather than tampered.
inline CommandResult cmd_check(const Json& certificate) {
    std::string stage;
    Json values;
    RunConfig cfg;
    std::string claimed;
    try {
        stage = detail::field(certificate, "stage").get<std::string>();
        claimed = detail::field(certificate, "verification").get<std::string>();
        values = detail::field(certificate, "inputs");
        cfg = run_config_from_json(detail::field(values, "config"));
        values.erase("config");
        values.erase("hash");
    } catch (const Error& e) {
        return {kExitMalformed, detail::error_json(e)};
    }

    Json fresh;
    try {
        fresh = make_transfer_certificate(stage, values, cfg);
    } catch (const Error& e) {
        return {kExitRefuted,
                Json{{"claim", "stage"},
                     {"message", std::string("replay failed: ") + e.what()}}};
    }

    if (canonical_dump(fresh) == canonical_dump(certificate))
        return {kExitWitnessed, Json{{"replayed", true}}};

    const std::string replayed = fresh.at("verification").get<std::string>();
    if (verification_rank(claimed) < verification_rank(replayed))
        return {kExitBudget,
                Json{{"claim", "verification"},
                     {"claimed", claimed},
                     {"replayed", replayed},
                     {"message", "certificate claims more than the caps can replay"}}};

    return {kExitRefuted,
            Json{{"claim", first_certificate_diff(fresh, certificate)},
                 {"message", "certificate does not replay"}}};
}

}  // namespace ramsey
