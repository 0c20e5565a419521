// Acceptance sweep: ten independent end-to-end checks over the library,
// each printed as a single PASS/FAIL line with its wall-clock time.  A few
// checks carry a pinned time limit; exceeding it fails the check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/commands.hpp"
#include "ramsey/quasiorder.hpp"

using namespace ramsey;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

// The eleven 2-uniform hypergraphs on at most three vertices.
std::vector<Hypergraph> small_graphs() {
    std::vector<Hypergraph> out;
    out.emplace_back(1, 2, std::vector<IntSet>{});
    out.emplace_back(2, 2, std::vector<IntSet>{});
    out.emplace_back(2, 2, std::vector<IntSet>{{1, 2}});
    const std::vector<IntSet> all = {{1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<IntSet> edges;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) edges.push_back(all[i]);
        out.emplace_back(3, 2, std::move(edges));
    }
    return out;
}

// 1. Category axioms for words, chains, and hypergraphs.
void check_category_axioms() {
    GrCategory words;
    const auto wr = check_category_laws(words, {1, 2, 3, 4});
    expect(wr.ok, "word category: " + wr.failure);

    ChainCategory chains;
    const auto cr = check_category_laws(chains, {1, 2, 3, 4});
    expect(cr.ok, "chain category: " + cr.failure);

    HyperCategory graphs(2);
    const auto family = small_graphs();
    expect(family.size() == 11, "graph family size");
    const auto hr = check_category_laws(graphs, family);
    expect(hr.ok, "hypergraph category: " + hr.failure);
    expect(hr.hom_sets == 121, "hypergraph hom set count");
}

// 2. The tuple / order-type / matrix factorization is a bijection.
void check_quasiorder_identities() {
    long seen = 0;
    for (int r = 1; r <= 4; ++r) {
        Tuple t(r, 1);
        while (true) {
            const auto sigma = tp(t);
            const auto m = mat(t);
            expect(tup(sigma, m) == t, "tup(tp, mat) identity");
            expect(tp(tup(sigma, m)) == sigma, "tp(tup) identity");
            expect(mat(tup(sigma, m)) == m, "mat(tup) identity");
            ++seen;
            int p = r;
            while (p > 0 && t[p - 1] == 4) t[--p] = 1;
            if (p == 0) break;
            ++t[p - 1];
        }
    }
    expect(seen == 4 + 16 + 64 + 256, "tuple sweep size");
}

// 3. Vertex images commute with lifted embeddings over the whole family.
void check_lift_squares() {
    GrCategory words;
    PreAdjunction pa(2);
    const auto family = small_graphs();
    std::map<int, GrTarget> targets;
    const auto target_at = [&](int n) -> const GrTarget& {
        auto it = targets.find(n);
        if (it == targets.end()) it = targets.emplace(n, pa.target(n)).first;
        return it->second;
    };
    long squares = 0;
    for (const Hypergraph& a : family) {
        const int m = downset_count_F(a);
        for (const Hypergraph& b : family) {
            for (const Embedding& f : enumerate_embeddings(b, a)) {
                const ParamWord h = pa.lift(a, b, f);
                expect(h.length() == m, "lift length");
                expect(h.arity() == downset_count_F(b), "lift arity");
                for (int n = m; n <= m + 1; ++n) {
                    const GrTarget& tgt = target_at(n);
                    for (const ParamWord& u : words.hom(m, n)) {
                        const Embedding lhs = compose_embeddings(pa.phi(a, tgt, u), f);
                        const Embedding rhs = pa.phi(b, tgt, substitute(u, h));
                        expect(lhs == rhs, "lift square for " + u.text());
                        ++squares;
                    }
                }
            }
        }
    }
    expect(squares > 1000, "lift square coverage");
}

// 4. Every vertex-image map is a checked embedding, and the audit shows
// that no internal check was skipped: per call, one order check per
// adjacent vertex pair, one preservation check per edge, one reflection
// check per vertex pair.
void check_vertex_image_audit() {
    GrCategory words;
    PreAdjunction pa(2);
    PhiAudit audit;
    std::size_t calls = 0, want_order = 0, want_preserve = 0, want_reflect = 0;
    for (const Hypergraph& a : small_graphs()) {
        const int m = downset_count_F(a);
        for (int n = m; n <= m + 1; ++n) {
            const GrTarget tgt = pa.target(n);
            for (const ParamWord& u : words.hom(m, n)) {
                const Embedding e = pa.phi(a, tgt, u, &audit);
                ++calls;
                want_order += static_cast<std::size_t>(a.size() - 1);
                want_preserve += a.edges().size();
                if (a.size() >= 2)
                    want_reflect += static_cast<std::size_t>(a.size() * (a.size() - 1) / 2);
                expect(is_embedding(a, tgt.graph, e), "vertex image embeds");
            }
        }
    }
    expect(calls > 0, "vertex image coverage");
    std::ostringstream msg;
    msg << "audit counters " << audit.order_checks << "/" << audit.preserve_checks << "/"
        << audit.reflect_checks << " want " << want_order << "/" << want_preserve << "/"
        << want_reflect << " over " << calls << " calls";
    expect(audit.order_checks == want_order, msg.str());
    expect(audit.preserve_checks == want_preserve, msg.str());
    expect(audit.reflect_checks == want_reflect, msg.str());
}

// 5. Chain arrow ground truths at two colors.
void check_chain_ground_truths() {
    ChainCategory chains;
    const auto won1 = verify_arrow(chains, 1, 2, 3, 2, SearchMode::Backtrack);
    expect(won1.verdict == ArrowReport::Verdict::Witnessed, "3 -> (2)^1_2");
    const auto lost1 = verify_arrow(chains, 1, 2, 2, 2, SearchMode::Backtrack);
    expect(lost1.verdict == ArrowReport::Verdict::Refuted, "2 -/-> (2)^1_2");
    expect(lost1.bad_coloring == Coloring{1, 2}, "pigeonhole counterexample");
    const auto won2 = verify_arrow(chains, 2, 3, 6, 2, SearchMode::Backtrack);
    expect(won2.verdict == ArrowReport::Verdict::Witnessed, "6 -> (3)^2_2");
    const auto lost2 = verify_arrow(chains, 2, 3, 5, 2, SearchMode::Backtrack);
    expect(lost2.verdict == ArrowReport::Verdict::Refuted, "5 -/-> (3)^2_2");
    expect(!lost2.bad_coloring.empty(), "triangle counterexample present");
}

// 6. The paired chain witnesses decode every coloring of the product
// instance; decoding internally rechecks monochromaticity.
void check_product_decode() {
    ChainCategory chains;
    const auto w1 = verify_arrow(chains, 1, 2, 3, 2, SearchMode::Exhaustive);
    expect(w1.verdict == ArrowReport::Verdict::Witnessed, "first factor witness");
    const auto w2 = verify_arrow(chains, 1, 1, 1, 8, SearchMode::Exhaustive);
    expect(w2.verdict == ArrowReport::Verdict::Witnessed, "second factor witness at 2^3 colors");
    const ProductTransfer<ChainCategory, ChainCategory> pt(chains, 1, 2, 3, w1, chains, 1, 1, 1,
                                                           w2, 2);
    expect(pt.t() == 3, "copy count of the first factor");
    expect(pt.positions() == 3, "product positions");
    int decoded = 0;
    for (int c0 = 1; c0 <= 2; ++c0)
        for (int c1 = 1; c1 <= 2; ++c1)
            for (int c2 = 1; c2 <= 2; ++c2) {
                const auto d = pt.decode({c0, c1, c2});
                expect(d.color >= 1 && d.color <= 2, "decoded color range");
                ++decoded;
            }
    expect(decoded == 8, "all colorings decoded");
    expect(pt.verify(SearchMode::Exhaustive).verdict == ArrowReport::Verdict::Witnessed,
           "product arrow verifies");
}

// 7. The order-type encoding round trips over every binary structure on at
// most three points.
void check_encoding_round_trips() {
    const Signature theta({"R"}, {2});
    long seen = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<Tuple> all;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) all.push_back({i, j});
        const std::size_t cells = all.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
            std::vector<Tuple> rel;
            for (std::size_t c = 0; c < cells; ++c)
                if (mask & (std::uint64_t{1} << c)) rel.push_back(all[c]);
            const OrderedStructure x(theta, n, {rel});
            const OrderedStructure xd = dagger(x);
            expect(xd.is_absolutely_ordered(), "encoded structure absolutely ordered");
            expect(star(xd, theta) == x, "decode inverts encode");
            ++seen;
        }
    }
    expect(seen == 530, "structure sweep size");
}

// 8. Random micro diagrams close to absolutely ordered objects whose legs
// embed and satisfy the recorded coincidences.
void check_diagram_closures() {
    std::mt19937 rng(0);
    const auto random_slice = [&](const std::string& name, int size) {
        std::vector<Tuple> rel;
        for (int i = 1; i <= size; ++i)
            for (int j = i + 1; j <= size; ++j)
                if (rng() & 1) rel.push_back({i, j});
        return OrderedStructure(Signature({name}, {2}), size, {rel});
    };

    long total_arrows = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int nsym = 1 + int(rng() % 2);
        std::vector<std::string> names = {"R"};
        if (nsym == 2) names.push_back("S");
        const Signature theta(names, std::vector<int>(nsym, 2));

        const int nb = 2 + int(rng() % 2);
        std::vector<OrderedStructure> top_slices;
        for (int s = 0; s < nsym; ++s) top_slices.push_back(random_slice(names[s], nb));
        const OrderedStructure top = merge_slices(theta, top_slices);
        const OrderedStructure bottom(theta, 1,
                                      std::vector<std::vector<Tuple>>(std::size_t(nsym)));

        // apexes with at least one embedding of the matching top slice
        std::vector<OrderedStructure> apexes;
        std::vector<std::vector<Embedding>> slice_homs;
        for (int s = 0; s < nsym; ++s) {
            OrderedStructure apex = top_slices[s];
            std::vector<Embedding> hom = enumerate_embeddings(top_slices[s], apex);
            for (int attempt = 0; attempt < 20; ++attempt) {
                OrderedStructure cand = random_slice(names[s], nb + int(rng() % 2));
                const auto cand_hom = enumerate_embeddings(top_slices[s], cand);
                if (!cand_hom.empty()) {
                    apex = cand;
                    hom = cand_hom;
                    break;
                }
            }
            apexes.push_back(apex);
            slice_homs.push_back(hom);
        }

        // cone legs: independent slice embeddings per top copy
        const int copies = 1 + int(rng() % 3);
        std::vector<std::vector<Embedding>> legs;
        for (int i = 0; i < copies; ++i) {
            std::vector<Embedding> leg;
            for (int s = 0; s < nsym; ++s)
                leg.push_back(slice_homs[s][rng() % slice_homs[s].size()]);
            legs.push_back(leg);
        }

        // all coincidences of the legs over single-point picks
        BinaryDiagram<RelProduct> dia{slices(bottom), slices(top), copies, {}};
        for (int i = 0; i < copies; ++i)
            for (int j = i + 1; j < copies; ++j)
                for (int u = 1; u <= nb; ++u)
                    for (int v = 1; v <= nb; ++v) {
                        bool coincide = true;
                        for (int s = 0; s < nsym; ++s)
                            if (legs[i][s].map[u - 1] != legs[j][s].map[v - 1]) {
                                coincide = false;
                                break;
                            }
                        if (!coincide) continue;
                        dia.arrows.push_back(
                            {i, j, diagonal_lift(Embedding::checked({u}, nb), nsym),
                             diagonal_lift(Embedding::checked({v}, nb), nsym)});
                    }
        total_arrows += static_cast<long>(dia.arrows.size());

        const Cone<RelProduct> cone{apexes, legs};
        const Closure cl = close_binary_diagram_rel(theta, dia, cone);
        expect(cl.object.is_absolutely_ordered(), "closure absolutely ordered");
        expect(cl.legs.size() == std::size_t(copies), "one closed leg per copy");
        for (const Embedding& leg : cl.legs)
            expect(is_embedding(top, cl.object, leg), "closed leg embeds");
        for (const auto& arrow : dia.arrows)
            expect(compose_embeddings(cl.legs[arrow.into_first], arrow.first.front()) ==
                       compose_embeddings(cl.legs[arrow.into_second], arrow.second.front()),
                   "closed coincidence commutes");
    }
    expect(total_arrows > 0, "coincidence coverage across trials");
}

// 9. Exhaustive and backtracking searches agree on verdicts and
// counterexamples.
void check_mode_agreement() {
    ChainCategory chains;
    const std::vector<std::array<int, 3>> instances = {
        {1, 2, 3}, {1, 2, 2}, {2, 3, 6}, {2, 3, 5}};
    for (const auto& [a, b, c] : instances) {
        const auto ex = verify_arrow(chains, a, b, c, 2, SearchMode::Exhaustive);
        const auto bt = verify_arrow(chains, a, b, c, 2, SearchMode::Backtrack);
        expect(ex.verdict == bt.verdict, "verdict agreement");
        if (ex.verdict == ArrowReport::Verdict::Refuted)
            expect(ex.bad_coloring == bt.bad_coloring, "counterexample agreement");
    }
    const auto w1 = verify_arrow(chains, 1, 2, 3, 2, SearchMode::Exhaustive);
    const auto w2 = verify_arrow(chains, 1, 1, 1, 8, SearchMode::Exhaustive);
    const ProductTransfer<ChainCategory, ChainCategory> pt(chains, 1, 2, 3, w1, chains, 1, 1, 1,
                                                           w2, 2);
    expect(pt.verify(SearchMode::Exhaustive).verdict == ArrowReport::Verdict::Witnessed,
           "product exhaustive");
    expect(pt.verify(SearchMode::Backtrack).verdict == ArrowReport::Verdict::Witnessed,
           "product backtrack");
}

// 10. Certificates are byte-deterministic, replayable, and tamper-evident.
void check_certificate_replay() {
    const RunConfig cfg;
    const Signature empty_sig({}, {});
    const Json values{{"bottom", to_json(OrderedStructure(empty_sig, 1, {}))},
                      {"top", to_json(OrderedStructure(empty_sig, 2, {}))},
                      {"colors", 2}};
    const auto r1 = cmd_transfer("pipeline", values, cfg);
    const auto r2 = cmd_transfer("pipeline", values, cfg);
    expect(r1.exit_code == 0, "pipeline certificate exit");
    expect(canonical_dump(r1.output) == canonical_dump(r2.output), "byte determinism");
    expect(cmd_check(r1.output).exit_code == 0, "replay accepts");
    Json tampered = r1.output;
    tampered["construction"]["witness"]["size"] = 4;
    expect(cmd_check(tampered).exit_code == 1, "tamper detected");
}

struct Criterion {
    const char* name;
    double limit_seconds;  // 0 = no pin
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"category axioms for words, chains, and graphs", 10.0, check_category_axioms},
        {"tuple factorization identities", 5.0, check_quasiorder_identities},
        {"lifted embeddings commute with vertex images", 60.0, check_lift_squares},
        {"vertex images embed with full audit", 0.0, check_vertex_image_audit},
        {"chain arrow ground truths", 30.0, check_chain_ground_truths},
        {"product decoding covers every coloring", 0.0, check_product_decode},
        {"order-type encoding round trips", 0.0, check_encoding_round_trips},
        {"random diagram closures embed and commute", 0.0, check_diagram_closures},
        {"search modes agree", 0.0, check_mode_agreement},
        {"certificates replay byte for byte", 0.0, check_certificate_replay},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && c.limit_seconds > 0 && seconds > c.limit_seconds) {
            std::ostringstream msg;
            msg << "exceeded time limit of " << c.limit_seconds << "s";
            error = msg.str();
        }
        const bool passed = error.empty();
        failures += passed ? 0 : 1;
        std::printf("[%2zu/10] %s  %s (%.2fs", i + 1, passed ? "PASS" : "FAIL", c.name, seconds);
        if (c.limit_seconds > 0) std::printf(", limit %.0fs", c.limit_seconds);
        std::printf(")%s%s\n", passed ? "" : ": ", error.c_str());
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures ? 1 : 0;
}
