#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ramsey/hypergraph.hpp"

using namespace ramsey;

TEST_CASE("edges are normalized to sorted unique increasing sets") {
    const Hypergraph path(3, 2, {{2, 3}, {1, 2}});
    CHECK(path.edges() == std::vector<IntSet>{{1, 2}, {2, 3}});
    CHECK(path.has_edge({2, 1}));
    CHECK_FALSE(path.has_edge({1, 3}));
}

TEST_CASE("downsets are the nonempty unions of initial vertex segments") {
    const Hypergraph path(3, 2, {{1, 2}, {2, 3}});
    CHECK(downsets(path) == std::vector<IntSet>{{1}, {2}, {1, 2}, {3}, {2, 3}});

    const Hypergraph k3(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(downsets(k3).size() == 6);  // 3 singletons + 3 pairs

    const Hypergraph triple(3, 3, {{1, 2, 3}});
    CHECK(downsets(triple).size() == 7);  // singletons, pairs, and the edge
}

TEST_CASE("target of the word functor at n = 2") {
    const auto tgt = gr_target_hypergraph(2, 2);
    CHECK(tgt.vertex_set == std::vector<IntSet>{{1, 2}, {1}, {2}, {}});
    CHECK(tgt.graph.edges() == std::vector<IntSet>{{1, 2}, {1, 3}});
    CHECK(tgt.vertex_of({1, 2}) == 1);
    CHECK(tgt.vertex_of({}) == 4);
}

TEST_CASE("target edges at n = 3 are the meeting pairs") {
    const auto tgt = gr_target_hypergraph(3, 2);
    REQUIRE(tgt.graph.size() == 8);
    int meeting = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            IntSet inter;
            std::set_intersection(tgt.vertex_set[i].begin(), tgt.vertex_set[i].end(),
                                  tgt.vertex_set[j].begin(), tgt.vertex_set[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) ++meeting;
        }
    CHECK(static_cast<int>(tgt.graph.edges().size()) == meeting);
    CHECK(tgt.graph.edges().size() == 15);
}

TEST_CASE("induced subgraphs renumber along the selection") {
    const Hypergraph path(3, 2, {{1, 2}, {2, 3}});
    const auto sub = path.induced({2, 3});
    CHECK(sub.size() == 2);
    CHECK(sub.edges() == std::vector<IntSet>{{1, 2}});
    const auto sub2 = path.induced({1, 3});
    CHECK(sub2.size() == 2);
    CHECK(sub2.edges().empty());
}

TEST_CASE("construction rejects malformed edges") {
    CHECK_THROWS_AS(Hypergraph(2, 1, {{1}}), Error);        // edge size below 2
    CHECK_THROWS_AS(Hypergraph(2, 2, {{1, 2}, {2, 1}}), Error);  // duplicate edge
    CHECK_THROWS_AS(Hypergraph(2, 2, {{1, 3}}), Error);     // vertex outside universe
}
