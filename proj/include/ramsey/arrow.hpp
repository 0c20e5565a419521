#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ramsey/category.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/limits.hpp"

namespace ramsey {

/// A k-coloring of a canonical hom set, one 1-based color per position.
using Coloring = std::vector<int>;

/// The combinatorial core of an arrow check C -> (B)^A_k: the canonical hom
/// sets and, for every w in hom(B,C), the copy w . hom(A,B) as a sorted
/// list of positions in hom(A,C).
template <FiniteCategory C>
struct ArrowInstance {
    std::vector<typename C::Morphism> hom_ac;
    std::vector<typename C::Morphism> hom_bc;
    std::vector<typename C::Morphism> hom_ab;
    std::vector<std::vector<int>> copies;

    std::size_t positions() const { return hom_ac.size(); }
};

template <FiniteCategory C>
ArrowInstance<C> make_arrow_instance(const C& cat, const typename C::Object& a,
                                     const typename C::Object& b, const typename C::Object& c) {
    ArrowInstance<C> inst;
    inst.hom_ac = cat.hom(a, c);
    inst.hom_bc = cat.hom(b, c);
    inst.hom_ab = cat.hom(a, b);

    std::unordered_map<std::string, int> index;
    index.reserve(inst.hom_ac.size());
    for (std::size_t i = 0; i < inst.hom_ac.size(); ++i)
        index.emplace(cat.key(inst.hom_ac[i]), static_cast<int>(i));

    inst.copies.reserve(inst.hom_bc.size());
    for (const auto& w : inst.hom_bc) {
        std::vector<int> copy;
        copy.reserve(inst.hom_ab.size());
        for (const auto& f : inst.hom_ab) {
            const auto it = index.find(cat.key(cat.compose(w, f)));
            if (it == index.end())
                throw Error(Errc::DomainMismatch, "composite missing from enumerated hom set");
            copy.push_back(it->second);
        }
        std::sort(copy.begin(), copy.end());
        copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
        inst.copies.push_back(std::move(copy));
    }
    return inst;
}

inline bool is_monochromatic(const std::vector<int>& copy, const Coloring& coloring) {
    for (std::size_t i = 1; i < copy.size(); ++i)
        if (coloring[copy[i]] != coloring[copy[0]]) return false;
    return true;
}

inline std::optional<std::size_t> find_monochromatic_copy(
    const std::vector<std::vector<int>>& copies, const Coloring& coloring) {
    for (std::size_t w = 0; w < copies.size(); ++w)
        if (is_monochromatic(copies[w], coloring)) return w;
    return std::nullopt;
}

struct ArrowReport {
    enum class Verdict { Witnessed, Refuted, BudgetExceeded };

    Verdict verdict = Verdict::BudgetExceeded;
    SearchMode mode = SearchMode::Exhaustive;
    int colors = 0;
    std::size_t positions = 0;   // |hom(A,C)|
    std::size_t copy_count = 0;  // |hom(B,C)|
    std::size_t copy_size = 0;   // |hom(A,B)|
    std::uint64_t work = 0;      // colorings enumerated or search nodes visited
    bool deterministic = true;
    std::string note;

    // Witnessed: a sample witness, taken from the all-ones coloring.
    std::size_t witness_index = 0;
    int witness_color = 1;
    // Refuted: a coloring with no monochromatic copy; the lex-least one
    // whenever the report is deterministic.
    Coloring bad_coloring;
};

inline const char* verdict_name(ArrowReport::Verdict v) {
    switch (v) {
        case ArrowReport::Verdict::Witnessed: return "Witnessed";
        case ArrowReport::Verdict::Refuted: return "Refuted";
        default: return "BudgetExceeded";
    }
}

namespace detail {

/// Lex-order sweep over all k^n colorings; returns the first one without a
/// monochromatic copy.  The caller bounds k^n beforehand.
inline std::optional<Coloring> exhaustive_bad_coloring(const std::vector<std::vector<int>>& copies,
                                                       std::size_t n, int k,
                                                       std::uint64_t& work) {
    Coloring coloring(n, 1);
    while (true) {
        ++work;
        if (!find_monochromatic_copy(copies, coloring)) return coloring;
        std::size_t p = n;
        while (p > 0 && coloring[p - 1] == k) coloring[--p] = 1;
        if (p == 0) return std::nullopt;
        ++coloring[p - 1];
    }
}

/// Backtracking search for the lex-least bad coloring among colorings that
/// use colors in first-appearance order.  The lex-least bad coloring is
/// always of that form: relabeling colors by first appearance maps bad
/// colorings to bad colorings and never increases the lex rank.
///
/// Positions are colored left to right; a copy can only become
/// monochromatic at its last position, so the per-copy color histograms
/// make the completing color checkable in O(copies at that position).
class BacktrackSearch {
public:
    BacktrackSearch(const std::vector<std::vector<int>>& copies, std::size_t n, int k,
                    std::uint64_t node_cap)
        : copies_(copies), n_(n), k_(k), node_cap_(node_cap), coloring_(n, 0),
          position_copies_(n), histograms_(copies.size()) {
        for (std::size_t w = 0; w < copies_.size(); ++w) {
            histograms_[w].assign(static_cast<std::size_t>(k) + 1, 0);
            for (int p : copies_[w]) position_copies_[p].push_back(static_cast<int>(w));
        }
    }

    /// Runs to completion (or budget) from an optional fixed prefix.
    /// Returns true when a bad coloring was found; it is then in result().
    bool run(const Coloring& prefix, const std::atomic<bool>* stop = nullptr) {
        for (std::size_t p = 0; p < prefix.size(); ++p) {
            if (forbidden(static_cast<int>(p), prefix[p])) {
                unwind(p);
                return false;
            }
            place(static_cast<int>(p), prefix[p]);
        }
        const bool found = descend(prefix.size(), max_color(prefix), stop);
        if (found) result_ = coloring_;
        unwind(prefix.size());
        return found;
    }

    bool exceeded() const { return exceeded_; }
    std::uint64_t nodes() const { return nodes_; }
    const Coloring& result() const { return result_; }

    /// All viable prefixes of the given depth in lex order, for search-space
    /// partitioning.  Colors obey the first-appearance normal form.
    std::vector<Coloring> viable_prefixes(std::size_t depth) {
        std::vector<Coloring> out;
        Coloring prefix;
        collect_prefixes(0, 0, depth, prefix, out);
        return out;
    }

private:
    static int max_color(const Coloring& c) {
        int used = 0;
        for (int v : c) used = std::max(used, v);
        return used;
    }

    bool forbidden(int position, int color) const {
        for (int w : position_copies_[position]) {
            const auto& copy = copies_[w];
            if (copy.back() != position) continue;
            if (copy.size() == 1) return true;
            if (histograms_[w][color] + 1 == static_cast<int>(copy.size())) return true;
        }
        return false;
    }

    void place(int position, int color) {
        coloring_[position] = color;
        for (int w : position_copies_[position]) ++histograms_[w][color];
    }

    void remove(int position) {
        const int color = coloring_[position];
        for (int w : position_copies_[position]) --histograms_[w][color];
        coloring_[position] = 0;
    }

    void unwind(std::size_t placed) {
        for (std::size_t p = placed; p > 0; --p) remove(static_cast<int>(p - 1));
    }

    bool descend(std::size_t position, int used, const std::atomic<bool>* stop) {
        if (position == n_) return true;
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        const int top = std::min(k_, used + 1);
        for (int color = 1; color <= top; ++color) {
            if (++nodes_ > node_cap_) {
                exceeded_ = true;
                return false;
            }
            if (forbidden(static_cast<int>(position), color)) continue;
            place(static_cast<int>(position), color);
            if (descend(position + 1, std::max(used, color), stop)) return true;
            remove(static_cast<int>(position));
            if (exceeded_) return false;
        }
        return false;
    }

    void collect_prefixes(std::size_t position, int used, std::size_t depth, Coloring& prefix,
                          std::vector<Coloring>& out) {
        if (position == depth) {
            out.push_back(prefix);
            return;
        }
        const int top = std::min(k_, used + 1);
        for (int color = 1; color <= top; ++color) {
            if (forbidden(static_cast<int>(position), color)) continue;
            place(static_cast<int>(position), color);
            prefix.push_back(color);
            collect_prefixes(position + 1, std::max(used, color), depth, prefix, out);
            prefix.pop_back();
            remove(static_cast<int>(position));
        }
    }

    const std::vector<std::vector<int>>& copies_;
    std::size_t n_;
    int k_;
    std::uint64_t node_cap_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
    Coloring coloring_;
    Coloring result_;
    std::vector<std::vector<int>> position_copies_;
    std::vector<std::vector<int>> histograms_;
};

/// k^n if it fits the cap, otherwise nullopt.
inline std::optional<std::uint64_t> coloring_space(std::size_t n, int k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(k)) return std::nullopt;
        total *= static_cast<std::uint64_t>(k);
    }
    if (total > cap) return std::nullopt;
    return total;
}

}  // namespace detail

/// Decides C -> (B)^A_k over the prepared instance.  Exhaustive mode sweeps
/// every coloring in lex order and is the reference oracle; Backtrack mode
/// searches for a bad coloring with pruning and reaches the same verdict
/// wherever both complete.  Refuted reports carry the lex-least bad
/// coloring when deterministic; parallel partitioned search (jobs > 1) may
/// return any bad coloring and clears the deterministic flag.
inline ArrowReport verify_arrow_copies(const std::vector<std::vector<int>>& copies,
                                       std::size_t positions, int k, SearchMode mode,
                                       const Limits& limits = {}) {
    if (k < kMinColors || k > kMaxColors)
        throw Error(Errc::InvalidArgument, "color count out of range", k);

    ArrowReport report;
    report.mode = mode;
    report.colors = k;
    report.positions = positions;
    report.copy_count = copies.size();

    if (positions > limits.arrow_positions) {
        report.note = "position count exceeds cap";
        return report;
    }

    if (mode == SearchMode::Exhaustive) {
        if (!detail::coloring_space(positions, k, limits.coloring_cap)) {
            report.note = "coloring space exceeds cap";
            return report;
        }
        auto bad = detail::exhaustive_bad_coloring(copies, positions, k, report.work);
        if (bad) {
            report.verdict = ArrowReport::Verdict::Refuted;
            report.bad_coloring = std::move(*bad);
        } else {
            report.verdict = ArrowReport::Verdict::Witnessed;
        }
        return report;
    }

    const int jobs = std::max(1, limits.jobs);
    if (jobs == 1) {
        detail::BacktrackSearch search(copies, positions, k, limits.node_cap);
        const bool found = search.run({});
        report.work = search.nodes();
        if (search.exceeded()) {
            report.note = "node budget exhausted";
            return report;
        }
        if (found) {
            report.verdict = ArrowReport::Verdict::Refuted;
            report.bad_coloring = search.result();
        } else {
            report.verdict = ArrowReport::Verdict::Witnessed;
        }
        return report;
    }

    // Partitioned search: viable prefixes are distributed round robin, the
    // first refutation cancels the siblings.
    report.deterministic = false;
    std::size_t depth = 0;
    {
        std::size_t estimated = 1;
        while (depth < positions && estimated < static_cast<std::size_t>(jobs) * 8) {
            estimated *= static_cast<std::size_t>(k);
            ++depth;
        }
    }
    detail::BacktrackSearch seed(copies, positions, k, limits.node_cap);
    const std::vector<Coloring> prefixes = seed.viable_prefixes(depth);

    std::atomic<bool> stop{false};
    std::atomic<bool> exceeded{false};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<std::optional<Coloring>> found(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j]() {
            detail::BacktrackSearch local(copies, positions, k,
                                          limits.node_cap / static_cast<std::uint64_t>(jobs));
            for (std::size_t i = j; i < prefixes.size(); i += static_cast<std::size_t>(jobs)) {
                if (stop.load(std::memory_order_relaxed)) break;
                if (local.run(prefixes[i], &stop)) {
                    found[j] = local.result();
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
                if (local.exceeded()) {
                    exceeded.store(true, std::memory_order_relaxed);
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
            }
            total_nodes.fetch_add(local.nodes(), std::memory_order_relaxed);
        });
    }
    for (auto& t : workers) t.join();
    report.work = total_nodes.load();
    for (const auto& f : found)
        if (f) {
            report.verdict = ArrowReport::Verdict::Refuted;
            report.bad_coloring = *f;
            return report;
        }
    if (exceeded.load()) {
        report.note = "node budget exhausted";
        return report;
    }
    report.verdict = ArrowReport::Verdict::Witnessed;
    return report;
}

template <FiniteCategory C>
ArrowReport verify_arrow(const C& cat, const typename C::Object& a, const typename C::Object& b,
                         const typename C::Object& c, int k,
                         SearchMode mode = SearchMode::Exhaustive, const Limits& limits = {}) {
    const auto inst = make_arrow_instance(cat, a, b, c);
    if (inst.hom_ab.empty())
        throw Error(Errc::NoEmbedding, "hom(A,B) is empty; the arrow is not well posed");
    ArrowReport report = verify_arrow_copies(inst.copies, inst.positions(), k, mode, limits);
    report.copy_size = inst.hom_ab.size();
    return report;
}

/// Deterministic pseudorandom colorings for sampled verification: each must
/// admit a monochromatic copy.  Returns the first failing coloring if any.
struct SampleReport {
    bool ok = true;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    Coloring failing;
};

inline SampleReport sample_colorings_admit(const std::vector<std::vector<int>>& copies,
                                           std::size_t positions, int k, std::uint64_t samples,
                                           std::uint64_t seed) {
    SampleReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, k);
    Coloring coloring(positions);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto& c : coloring) c = pick(rng);
        ++report.checked;
        if (!find_monochromatic_copy(copies, coloring)) {
            report.ok = false;
            report.failing = coloring;
            return report;
        }
    }
    return report;
}

/// Linear scan over candidate targets, returning the first witnessed one.
template <FiniteCategory C>
struct WitnessSearch {
    enum class Status { Found, Exhausted, Budget };
    Status status = Status::Exhausted;
    std::optional<typename C::Object> object;
    ArrowReport report;
    std::vector<ArrowReport> attempts;
};

template <FiniteCategory C>
WitnessSearch<C> search_witness(const C& cat, const typename C::Object& a,
                                const typename C::Object& b, int k,
                                const std::vector<typename C::Object>& candidates,
                                SearchMode mode = SearchMode::Backtrack,
                                const Limits& limits = {}) {
    WitnessSearch<C> search;
    bool budget_hit = false;
    for (const auto& c : candidates) {
        ArrowReport report;
        try {
            report = verify_arrow(cat, a, b, c, k, mode, limits);
        } catch (const Error& e) {
            // A candidate whose hom sets cannot be enumerated within the
            // caps is a budget outcome, not a malformed arrow.
            if (e.code() != Errc::SizeLimitExceeded) throw;
            report.mode = mode;
            report.colors = k;
            report.note = "hom enumeration exceeds cap";
        }
        const auto verdict = report.verdict;
        search.attempts.push_back(report);
        if (verdict == ArrowReport::Verdict::Witnessed) {
            search.status = WitnessSearch<C>::Status::Found;
            search.object = c;
            search.report = std::move(search.attempts.back());
            return search;
        }
        if (verdict == ArrowReport::Verdict::BudgetExceeded) budget_hit = true;
    }
    search.status = budget_hit ? WitnessSearch<C>::Status::Budget
                               : WitnessSearch<C>::Status::Exhausted;
    if (!search.attempts.empty()) search.report = search.attempts.back();
    return search;
}

}  // namespace ramsey
