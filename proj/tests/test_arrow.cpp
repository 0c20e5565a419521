#include <catch2/catch_amalgamated.hpp>

#include "ramsey/arrow.hpp"

using namespace ramsey;

TEST_CASE("chain pigeonhole 3 -> (2)^1_2") {
    ChainCategory ch;
    for (SearchMode mode : {SearchMode::Exhaustive, SearchMode::Backtrack}) {
        const auto r = verify_arrow(ch, 1, 2, 3, 2, mode);
        CHECK(r.verdict == ArrowReport::Verdict::Witnessed);
    }
}

TEST_CASE("chain refutation 2 -/-> (2)^1_2 with matching counterexamples") {
    ChainCategory ch;
    const auto re = verify_arrow(ch, 1, 2, 2, 2, SearchMode::Exhaustive);
    REQUIRE(re.verdict == ArrowReport::Verdict::Refuted);
    CHECK(re.bad_coloring == Coloring{1, 2});
    const auto rb = verify_arrow(ch, 1, 2, 2, 2, SearchMode::Backtrack);
    REQUIRE(rb.verdict == ArrowReport::Verdict::Refuted);
    CHECK(rb.bad_coloring == re.bad_coloring);
}

TEST_CASE("edge colorings of chains reproduce R(3,3) = 6") {
    ChainCategory ch;
    const auto won = verify_arrow(ch, 2, 3, 6, 2, SearchMode::Backtrack);
    CHECK(won.verdict == ArrowReport::Verdict::Witnessed);
    const auto wone = verify_arrow(ch, 2, 3, 6, 2, SearchMode::Exhaustive);
    CHECK(wone.verdict == ArrowReport::Verdict::Witnessed);

    const auto re = verify_arrow(ch, 2, 3, 5, 2, SearchMode::Exhaustive);
    const auto rb = verify_arrow(ch, 2, 3, 5, 2, SearchMode::Backtrack);
    REQUIRE(re.verdict == ArrowReport::Verdict::Refuted);
    REQUIRE(rb.verdict == ArrowReport::Verdict::Refuted);
    // both modes surface the lex-least bad coloring
    CHECK(re.bad_coloring == rb.bad_coloring);
}

TEST_CASE("parallel search agrees and its counterexample is genuine") {
    ChainCategory ch;
    Limits par;
    par.jobs = 3;
    const auto lost = verify_arrow(ch, 2, 3, 5, 2, SearchMode::Backtrack, par);
    REQUIRE(lost.verdict == ArrowReport::Verdict::Refuted);
    CHECK_FALSE(lost.deterministic);
    const auto inst = make_arrow_instance(ch, 2, 3, 5);
    CHECK_FALSE(find_monochromatic_copy(inst.copies, lost.bad_coloring));
    const auto won = verify_arrow(ch, 2, 3, 6, 2, SearchMode::Backtrack, par);
    CHECK(won.verdict == ArrowReport::Verdict::Witnessed);
}

TEST_CASE("budget caps convert to reported outcomes") {
    ChainCategory ch;
    Limits tiny;
    tiny.node_cap = 10;
    const auto r1 = verify_arrow(ch, 2, 3, 6, 2, SearchMode::Backtrack, tiny);
    CHECK(r1.verdict == ArrowReport::Verdict::BudgetExceeded);
    Limits caps;
    caps.arrow_positions = 4;
    const auto r2 = verify_arrow(ch, 1, 2, 6, 2, SearchMode::Exhaustive, caps);
    CHECK(r2.verdict == ArrowReport::Verdict::BudgetExceeded);
}

TEST_CASE("precondition guards") {
    ChainCategory ch;
    try {
        verify_arrow(ch, 1, 2, 3, 1);
        FAIL("one color accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidArgument);
    }
    try {
        verify_arrow(ch, 1, 2, 3, 17);
        FAIL("seventeen colors accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidArgument);
    }
    try {
        verify_arrow(ch, 3, 2, 4, 2);
        FAIL("empty hom(A, B) accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoEmbedding);
    }
}

TEST_CASE("no copies of B means any coloring refutes") {
    ChainCategory ch;
    for (SearchMode mode : {SearchMode::Exhaustive, SearchMode::Backtrack}) {
        const auto r = verify_arrow(ch, 1, 3, 2, 2, mode);
        REQUIRE(r.verdict == ArrowReport::Verdict::Refuted);
        CHECK(r.bad_coloring == Coloring{1, 1});
    }
}

TEST_CASE("witness search walks the candidate list") {
    ChainCategory ch;
    const auto sw = search_witness(ch, 1, 2, 2, {2, 3, 4});
    REQUIRE(sw.status == WitnessSearch<ChainCategory>::Status::Found);
    CHECK(*sw.object == 3);
    CHECK(sw.attempts.size() == 2);
}

TEST_CASE("coloring samples respect ground truth") {
    ChainCategory ch;
    const auto good = sample_colorings_admit(make_arrow_instance(ch, 1, 2, 3).copies, 3, 2, 100, 42);
    CHECK(good.ok);
    CHECK(good.checked == 100);
    const auto bad = sample_colorings_admit(make_arrow_instance(ch, 1, 2, 2).copies, 2, 2, 100, 42);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("one-letter word pigeonhole") {
    GrCategory gr;
    const auto r = verify_arrow(gr, 0, 1, 1, 2, SearchMode::Exhaustive);
    CHECK(r.verdict == ArrowReport::Verdict::Witnessed);
}
