#include <catch2/catch_amalgamated.hpp>

#include "ramsey/set_order.hpp"

using namespace ramsey;

TEST_CASE("power set orders are linear orders") {
    for (int n = 0; n <= 5; ++n) {
        for (SetOrder order : {SetOrder::Lex, SetOrder::Alex, SetOrder::CoLex}) {
            const auto subsets = sorted_power_set(n, order);
            REQUIRE(subsets.size() == (std::size_t{1} << n));
            // strictly sorted, hence irreflexive and total
            for (std::size_t i = 0; i + 1 < subsets.size(); ++i)
                REQUIRE(set_less(n, subsets[i], subsets[i + 1], order));
            // transitivity via the sorted positions
            for (std::size_t i = 0; i < subsets.size(); ++i)
                for (std::size_t j = 0; j < subsets.size(); ++j) {
                    const Cmp c = compare_sets(n, subsets[i], subsets[j], order);
                    if (i < j) REQUIRE(c == Cmp::Less);
                    if (i == j) REQUIRE(c == Cmp::Equal);
                    if (i > j) REQUIRE(c == Cmp::Greater);
                }
        }
    }
}

TEST_CASE("alex order on three points") {
    const auto got = sorted_power_set(3, SetOrder::Alex);
    const std::vector<IntSet> want = {{},    {1},    {2},    {1, 2},
                                      {3},   {1, 3}, {2, 3}, {1, 2, 3}};
    REQUIRE(got == want);
}

TEST_CASE("colex order on two points puts the full set first") {
    const auto got = sorted_power_set(2, SetOrder::CoLex);
    const std::vector<IntSet> want = {{1, 2}, {1}, {2}, {}};
    REQUIRE(got == want);
}

TEST_CASE("colex is the complement dual of lex") {
    for (int n = 1; n <= 5; ++n) {
        IntSet ground;
        for (int i = 1; i <= n; ++i) ground.push_back(i);
        const auto all = sorted_power_set(n, SetOrder::Lex);
        for (const IntSet& a : all)
            for (const IntSet& b : all) {
                const IntSet ca = detail::set_difference(ground, a);
                const IntSet cb = detail::set_difference(ground, b);
                REQUIRE(set_less(n, a, b, SetOrder::CoLex) ==
                        set_less(n, ca, cb, SetOrder::Lex));
            }
    }
}

TEST_CASE("empty set convention never fires inside comparisons") {
    // compare_sets resolves subset-comparable pairs before taking any
    // min or max, so the empty-set fallback must stay untouched.
    const long before = detail::empty_convention_uses().load();
    for (int n = 0; n <= 5; ++n)
        for (SetOrder order : {SetOrder::Lex, SetOrder::Alex, SetOrder::CoLex})
            sorted_power_set(n, order);
    REQUIRE(detail::empty_convention_uses().load() == before);
}

TEST_CASE("power set enumeration respects the cap") {
    REQUIRE_THROWS_AS(sorted_power_set(5, SetOrder::Lex, 16), Error);
    REQUIRE_THROWS_AS(sorted_power_set(-1, SetOrder::Lex), Error);
}
