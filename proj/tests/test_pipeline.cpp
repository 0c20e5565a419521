#include <catch2/catch_amalgamated.hpp>

#include "ramsey/pipeline.hpp"

using namespace ramsey;

namespace {

const Signature& edge_sig() {
    static const Signature s({"E"}, {2});
    return s;
}

}  // namespace

TEST_CASE("identical one-point structures finish on the order path") {
    const OrderedStructure point(edge_sig(), 1, {{}});
    const auto r = nesetril_rodl_pipeline(point, point);
    REQUIRE(r.completed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 1);
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[0].name == "encode-absolute");
    CHECK(r.trace[1].name == "signature-reduce");
    CHECK(r.trace[2].name == "order-witness");
    CHECK(r.trace[3].name == "signature-expand");
    CHECK(r.trace[4].name == "decode-order");
    CHECK(r.overall_verification() == "exhaustive");
}

TEST_CASE("empty signature runs the chain pigeonhole") {
    const Signature empty_sig({}, {});
    const OrderedStructure p1(empty_sig, 1, {});
    const OrderedStructure c2(empty_sig, 2, {});
    const auto r = nesetril_rodl_pipeline(p1, c2);
    REQUIRE(r.completed);
    CHECK(r.witness->size() == 3);
    CHECK(r.witness->signature().count() == 0);
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[2].name == "order-witness");
}

TEST_CASE("an everywhere-empty symbol is dropped and restored") {
    const OrderedStructure point(edge_sig(), 1, {{}});
    const OrderedStructure c2(edge_sig(), 2, {{}});
    const auto r = nesetril_rodl_pipeline(point, c2);
    REQUIRE(r.completed);
    CHECK(r.witness->size() == 3);
    CHECK(r.witness->signature().count() == 1);
    CHECK(r.witness->tuples(0).empty());
    CHECK(r.trace[2].name == "order-witness");
}

TEST_CASE("edge in edge walks the full staged path") {
    const OrderedStructure k2(edge_sig(), 2, {{{1, 2}}});
    const auto r = nesetril_rodl_pipeline(k2, k2);
    REQUIRE(r.completed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 8);
    CHECK(r.witness->tuples(0).size() == 15);
    REQUIRE(r.trace.size() == 9);
    CHECK(r.trace[2].name == "hypergraph-bridge");
    CHECK(r.trace[3].name == "parameter-witness");
    CHECK(r.trace[4].name == "preadjunction-transfer");
    CHECK(r.trace[5].name == "product-witness");
    CHECK(r.trace[6].name == "diagonal-closure");
    CHECK(r.trace[7].name == "signature-expand");
    CHECK(r.trace[8].name == "decode-order");
    CHECK(r.overall_verification() == "exhaustive");
    for (const auto& st : r.trace) CHECK(st.status == "done");
}

TEST_CASE("point into edge records a budget outcome at the word search") {
    const OrderedStructure point(edge_sig(), 1, {{}});
    const OrderedStructure k2(edge_sig(), 2, {{{1, 2}}});
    const auto r = nesetril_rodl_pipeline(point, k2);
    CHECK_FALSE(r.completed);
    CHECK_FALSE(r.witness.has_value());
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.back().name == "parameter-witness");
    CHECK(r.trace.back().status == "budget");
    CHECK(r.overall_verification() == "budget-exceeded");
}

TEST_CASE("pipelines validate their inputs") {
    const OrderedStructure point(edge_sig(), 1, {{}});
    const Signature other({"R"}, {2});
    const OrderedStructure q(other, 1, {{}});
    CHECK_THROWS_AS(nesetril_rodl_pipeline(point, q), Error);
    // A must embed into B
    const OrderedStructure k2(edge_sig(), 2, {{{1, 2}}});
    CHECK_THROWS_AS(nesetril_rodl_pipeline(k2, point), Error);
    PipelineOptions opt;
    opt.k = 1;
    CHECK_THROWS_AS(nesetril_rodl_pipeline(point, point, opt), Error);
}
