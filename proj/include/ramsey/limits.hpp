#pragma once

#include <cstddef>
#include <cstdint>

namespace ramsey {

/// Search mode for the Ramsey-arrow verifier.
enum class SearchMode { Exhaustive, Backtrack };

/// Runtime budgets.  All searches are desk-scale; anything hitting a cap is
/// reported as such, never silently truncated.
struct Limits {
    /// Cap on the number of morphisms materialized by a single hom-set
    /// enumeration (also bounds power-set and word enumerations).
    std::size_t hom_cap = 200000;
    /// Cap on |hom(A,C)|, the number of coloring positions in an arrow check.
    std::size_t arrow_positions = 32;
    /// Cap on k^|hom(A,C)| for Exhaustive mode.
    std::uint64_t coloring_cap = std::uint64_t{1} << 25;
    /// Node budget for Backtrack mode.
    std::uint64_t node_cap = 100000000;
    /// Worker count for the partitioned Backtrack search.  1 = sequential
    /// (deterministic, lex-least refutation).
    int jobs = 1;
};

inline constexpr int kMinColors = 2;
inline constexpr int kMaxColors = 16;

}  // namespace ramsey
