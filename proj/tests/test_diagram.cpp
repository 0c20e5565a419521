#include <catch2/catch_amalgamated.hpp>

#include "ramsey/diagram.hpp"

using namespace ramsey;

namespace {

const Signature& edge_sig() {
    static const Signature s({"E"}, {2});
    return s;
}
const Signature& two_sig() {
    static const Signature s({"R", "S"}, {2, 2});
    return s;
}

}  // namespace

TEST_CASE("merge inverts slices") {
    const OrderedStructure both(two_sig(), 3, {{{1, 2}}, {{2, 3}}});
    const auto parts = slices(both);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].signature().names[0] == "R");
    CHECK(parts[0].tuples(0).size() == 1);
    CHECK(merge_slices(two_sig(), parts) == both);
    // slices over different universes cannot merge
    auto broken = parts;
    broken[1] = OrderedStructure(Signature({"S"}, {2}), 4, {{}});
    try {
        merge_slices(two_sig(), broken);
        FAIL("universe mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::KindMismatch);
    }
}

TEST_CASE("diagonal tuples of embeddings are recognized") {
    CHECK(is_diagonal(diagonal_lift(Embedding::identity(2), 3)));
    auto f = diagonal_lift(Embedding::identity(2), 2);
    f[1] = Embedding::checked({1, 3}, 3);
    CHECK_FALSE(is_diagonal(f));
}

TEST_CASE("cone legs must equalize the diagram arrows") {
    const OrderedStructure pt(edge_sig(), 1, {{}});
    const OrderedStructure k2(edge_sig(), 2, {{{1, 2}}});
    const OrderedStructure k3(edge_sig(), 3, {{{1, 2}, {1, 3}, {2, 3}}});
    RelCategory rel(edge_sig());
    RelProduct prod{std::vector<RelCategory>{rel}};
    BinaryDiagram<RelProduct> dia{slices(pt), slices(k2), 2, {}};
    dia.arrows.push_back({0, 1, diagonal_lift(Embedding::checked({2}, 2), 1),
                          diagonal_lift(Embedding::checked({2}, 2), 1)});
    Cone<RelProduct> cone{slices(k3),
                          {{Embedding::checked({1, 2}, 3)}, {Embedding::checked({1, 3}, 3)}}};
    try {
        check_cone(prod, dia, cone);
        FAIL("non-commuting cone accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IncompatibleCone);
    }
    // same legs but arrows into vertex 1: [1,2].[1] == [1,3].[1]
    dia.arrows[0].first = diagonal_lift(Embedding::checked({1}, 2), 1);
    dia.arrows[0].second = diagonal_lift(Embedding::checked({1}, 2), 1);
    CHECK(check_cone(prod, dia, cone) == 1);
}

TEST_CASE("closure of a one-copy two-symbol diagram is the ordered grid") {
    // Apexes: an R-edge on two points and an S-edge on two points.  The
    // universe is the 2x2 grid in lex order; R relates the free S-side,
    // S survives only on strictly increasing pairs of both coordinates.
    const Signature r_sig({"R"}, {2}), s_sig({"S"}, {2});
    const OrderedStructure cr(r_sig, 2, {{{1, 2}}});
    const OrderedStructure cs(s_sig, 2, {{{1, 2}}});
    const OrderedStructure b(two_sig(), 2, {{{1, 2}}, {{1, 2}}});
    const OrderedStructure bot(two_sig(), 1, {{}, {}});
    BinaryDiagram<RelProduct> dia{slices(bot), slices(b), 1, {}};
    Cone<RelProduct> cone{{cr, cs}, {{Embedding::identity(2), Embedding::identity(2)}}};
    const Closure cl = close_binary_diagram_rel(two_sig(), dia, cone);
    CHECK(cl.object.size() == 4);
    CHECK(cl.object.tuples(0) == std::vector<Tuple>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(cl.object.tuples(1) == std::vector<Tuple>{{1, 4}});
    REQUIRE(cl.legs.size() == 1);
    CHECK(cl.legs[0].map == std::vector<int>{1, 4});
    CHECK(is_embedding(b, cl.object, cl.legs[0]));
}

TEST_CASE("triangle diagram closes to the triangle") {
    const OrderedStructure pt(edge_sig(), 1, {{}});
    const OrderedStructure k2(edge_sig(), 2, {{{1, 2}}});
    const OrderedStructure k3(edge_sig(), 3, {{{1, 2}, {1, 3}, {2, 3}}});
    SubcategoryTransfer tr(edge_sig(), pt, k2, {k3.reduct({"E"})}, 2);
    CHECK(tr.witness_object() == k3);
    CHECK(tr.diagram().arrows.size() == 3);
    CHECK(tr.positions() == 3);
    int decoded = 0;
    for (int c1 = 1; c1 <= 2; ++c1)
        for (int c2 = 1; c2 <= 2; ++c2)
            for (int c3 = 1; c3 <= 2; ++c3) {
                const auto dec = tr.decode({c1, c2, c3});
                CHECK(dec.color >= 1);
                CHECK(dec.color <= 2);
                ++decoded;
            }
    CHECK(decoded == 8);
    CHECK(tr.verify(SearchMode::Exhaustive).verdict == ArrowReport::Verdict::Witnessed);
    CHECK(tr.sampled_verify(64, 11).ok);
}

TEST_CASE("trivial bottom and top close to the full product") {
    const OrderedStructure pt2(two_sig(), 1, {{}, {}});
    const Signature r_sig({"R"}, {2}), s_sig({"S"}, {2});
    const OrderedStructure cr(r_sig, 3, {{{1, 2}, {1, 3}, {2, 3}}});
    const OrderedStructure cs(s_sig, 2, {{{1, 2}}});
    SubcategoryTransfer tr(two_sig(), pt2, pt2, {cr, cs}, 2);
    CHECK(tr.witness_object().size() == 6);
    CHECK(tr.positions() == 6);
    const auto dec = tr.decode({2, 1, 1, 1, 1, 1});
    CHECK(dec.color == 2);
    CHECK(tr.sampled_verify(32, 5).ok);
    CHECK(tr.verify(SearchMode::Exhaustive).verdict == ArrowReport::Verdict::Witnessed);
}
