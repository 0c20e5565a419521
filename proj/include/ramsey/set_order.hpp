#pragma once

#include <algorithm>
#include <atomic>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// Subset of {1..n}, stored sorted ascending.
using IntSet = std::vector<int>;

enum class SetOrder { Lex, Alex, CoLex };
enum class Cmp { Less, Equal, Greater };

namespace detail {

/// Counts how often the empty-set min/max convention below was used.
/// compare_sets dispatches the subset clause before any min/max, so the
/// convention must never fire there; a test pins this down.
inline std::atomic<long>& empty_convention_uses() {
    static std::atomic<long> uses{0};
    return uses;
}

/// min over the ground chain {1..n}; by convention min of the empty set is
/// the top element n.
inline int min_of(const IntSet& s, int ground_n) {
    if (s.empty()) {
        empty_convention_uses()++;
        return ground_n;
    }
    return s.front();
}

/// max over the ground chain {1..n}; by convention max of the empty set is
/// the bottom element 1.
inline int max_of(const IntSet& s, [[maybe_unused]] int ground_n) {
    if (s.empty()) {
        empty_convention_uses()++;
        return 1;
    }
    return s.back();
}

inline IntSet set_difference(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const IntSet& a, const IntSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

/// Compares two subsets of the ground chain {1..ground_n} under one of the
/// three power-set orders:
///
///   Lex:    A < B  iff  A ⊂ B, or min(B∖A) < min(A∖B) when incomparable
///   Alex:   A < B  iff  A ⊂ B, or max(A∖B) < max(B∖A) when incomparable
///   CoLex:  A < B  iff  A ⊃ B, or min(A∖B) < min(B∖A) when incomparable
///
/// Each is a linear order on the power set.  CoLex is the complement-dual of
/// Lex: A <_colex B iff (L∖A) <_lex (L∖B).
inline Cmp compare_sets(int ground_n, const IntSet& a, const IntSet& b, SetOrder order) {
    if (a == b) return Cmp::Equal;
    const bool a_sub_b = detail::is_subset(a, b);
    const bool b_sub_a = detail::is_subset(b, a);
    if (a_sub_b || b_sub_a) {
        switch (order) {
            case SetOrder::Lex:
            case SetOrder::Alex:
                return a_sub_b ? Cmp::Less : Cmp::Greater;
            case SetOrder::CoLex:
                return b_sub_a ? Cmp::Less : Cmp::Greater;
        }
    }
    // Incomparable: both differences are nonempty, so the empty-set
    // convention cannot fire here.
    const IntSet a_minus_b = detail::set_difference(a, b);
    const IntSet b_minus_a = detail::set_difference(b, a);
    bool less = false;
    switch (order) {
        case SetOrder::Lex:
            less = detail::min_of(b_minus_a, ground_n) < detail::min_of(a_minus_b, ground_n);
            break;
        case SetOrder::Alex:
            less = detail::max_of(a_minus_b, ground_n) < detail::max_of(b_minus_a, ground_n);
            break;
        case SetOrder::CoLex:
            less = detail::min_of(a_minus_b, ground_n) < detail::min_of(b_minus_a, ground_n);
            break;
    }
    return less ? Cmp::Less : Cmp::Greater;
}

inline bool set_less(int ground_n, const IntSet& a, const IntSet& b, SetOrder order) {
    return compare_sets(ground_n, a, b, order) == Cmp::Less;
}

/// All 2^n subsets of {1..n}, sorted by the requested order.
inline std::vector<IntSet> sorted_power_set(int n, SetOrder order, std::size_t cap = 200000) {
    if (n < 0) throw Error(Errc::InvalidArgument, "ground set size must be nonnegative");
    const std::uint64_t count = std::uint64_t{1} << n;
    if (n >= 63 || count > cap)
        throw Error(Errc::SizeLimitExceeded, "power set exceeds enumeration cap", static_cast<long>(n));
    std::vector<IntSet> subsets;
    subsets.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        IntSet s;
        for (int i = 1; i <= n; ++i)
            if (mask & (std::uint64_t{1} << (i - 1))) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(),
              [&](const IntSet& x, const IntSet& y) { return set_less(n, x, y, order); });
    return subsets;
}

}  // namespace ramsey
