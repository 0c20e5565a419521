#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/arrow.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/param_word.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

using Json = nlohmann::json;

/// Canonical byte form: objects keep sorted keys (nlohmann stores keys
/// ordered), arrays keep construction order, two-space indent, trailing
/// newline.  All certificate hashing runs over these bytes.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const IntSet& e : h.edges()) edges.push_back(e);
    return Json{{"kind", "hypergraph"}, {"b", h.edge_size()}, {"size", h.size()},
                {"edges", std::move(edges)}};
}

inline Json to_json(const Signature& sig) {
    return Json{{"names", sig.names}, {"arities", sig.arities}};
}

inline Json to_json(const OrderedStructure& a) {
    Json relations = Json::array();
    for (int s = 0; s < a.signature().count(); ++s) {
        Json rel = Json::array();
        for (const Tuple& t : a.tuples(s)) rel.push_back(t);
        relations.push_back(std::move(rel));
    }
    return Json{{"kind", "rel"}, {"signature", to_json(a.signature())}, {"size", a.size()},
                {"relations", std::move(relations)}};
}

inline Json to_json(const ParamWord& w) {
    return Json{{"kind", "word"}, {"alphabet", w.alphabet()}, {"text", w.text()}};
}

inline Json to_json(const Embedding& e) {
    return Json{{"kind", "embedding"}, {"cod", e.cod}, {"map", e.map}};
}

namespace detail {

inline void need(bool cond, const std::string& what) {
    if (!cond) throw Error(Errc::InvalidArgument, "malformed input: " + what);
}

inline const Json& field(const Json& j, const std::string& key) {
    need(j.is_object() && j.contains(key), "missing field \"" + key + "\"");
    return j.at(key);
}

inline std::vector<int> int_list(const Json& j, const std::string& what) {
    need(j.is_array(), what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        need(v.is_number_integer(), what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

inline std::string kind_of(const Json& j) {
    need(j.is_object() && j.contains("kind") && j["kind"].is_string(),
         "expected an object with a \"kind\" tag");
    return j["kind"].get<std::string>();
}

}  // namespace detail

inline Hypergraph hypergraph_from_json(const Json& j) {
    detail::need(detail::kind_of(j) == "hypergraph", "expected kind \"hypergraph\"");
    detail::need(j.contains("b") && j["b"].is_number_integer(), "missing edge size");
    detail::need(j.contains("size") && j["size"].is_number_integer(), "missing size");
    detail::need(j.contains("edges"), "missing edges");
    std::vector<IntSet> edges;
    for (const auto& e : j["edges"]) edges.push_back(detail::int_list(e, "edge"));
    return Hypergraph(j["size"].get<int>(), j["b"].get<int>(), std::move(edges));
}

inline Signature signature_from_json(const Json& j) {
    detail::need(j.is_object() && j.contains("names") && j.contains("arities"),
                 "signature needs names and arities");
    detail::need(j["names"].is_array(), "signature names must be an array");
    std::vector<std::string> names;
    for (const auto& n : j["names"]) {
        detail::need(n.is_string(), "symbol names must be strings");
        names.push_back(n.get<std::string>());
    }
    return Signature(std::move(names), detail::int_list(j["arities"], "arities"));
}

inline OrderedStructure structure_from_json(const Json& j) {
    detail::need(detail::kind_of(j) == "rel", "expected kind \"rel\"");
    detail::need(j.contains("signature"), "missing signature");
    detail::need(j.contains("size") && j["size"].is_number_integer(), "missing size");
    detail::need(j.contains("relations") && j["relations"].is_array(), "missing relations");
    Signature sig = signature_from_json(j["signature"]);
    std::vector<std::vector<Tuple>> relations;
    for (const auto& rel : j["relations"]) {
        detail::need(rel.is_array(), "each relation must be an array");
        std::vector<Tuple> tuples;
        for (const auto& t : rel) tuples.push_back(detail::int_list(t, "tuple"));
        relations.push_back(std::move(tuples));
    }
    return OrderedStructure(std::move(sig), j["size"].get<int>(), std::move(relations));
}

inline ParamWord word_from_json(const Json& j) {
    detail::need(detail::kind_of(j) == "word", "expected kind \"word\"");
    detail::need(j.contains("alphabet") && j["alphabet"].is_array(), "missing alphabet");
    detail::need(j.contains("text") && j["text"].is_string(), "missing text");
    Alphabet alphabet;
    for (const auto& s : j["alphabet"]) {
        detail::need(s.is_string(), "alphabet letters must be strings");
        alphabet.push_back(s.get<std::string>());
    }
    return ParamWord::parse(alphabet, j["text"].get<std::string>());
}

inline Embedding embedding_from_json(const Json& j) {
    detail::need(detail::kind_of(j) == "embedding", "expected kind \"embedding\"");
    detail::need(j.contains("cod") && j["cod"].is_number_integer(), "missing codomain");
    detail::need(j.contains("map"), "missing map");
    return Embedding::checked(detail::int_list(j["map"], "map"), j["cod"].get<int>());
}

/// One input object of the verifier: a chain or word-category object (a
/// bare size), a hypergraph, or a relational structure.
struct AnyObject {
    enum class Kind { Chain, Gr, Hypergraph, Rel };

    Kind kind = Kind::Chain;
    int number = 0;
    std::optional<Hypergraph> graph;
    std::optional<OrderedStructure> rel;

    static AnyObject from_json(const Json& j) {
        const std::string k = detail::kind_of(j);
        AnyObject out;
        if (k == "chain" || k == "gr") {
            out.kind = k == "chain" ? Kind::Chain : Kind::Gr;
            detail::need(j.contains("size") && j["size"].is_number_integer(), "missing size");
            out.number = j["size"].get<int>();
            return out;
        }
        if (k == "hypergraph") {
            out.kind = Kind::Hypergraph;
            out.graph = hypergraph_from_json(j);
            return out;
        }
        if (k == "rel") {
            out.kind = Kind::Rel;
            out.rel = structure_from_json(j);
            return out;
        }
        throw Error(Errc::InvalidArgument, "unknown object kind \"" + k + "\"");
    }

    Json to_json() const {
        switch (kind) {
            case Kind::Chain: return Json{{"kind", "chain"}, {"size", number}};
            case Kind::Gr: return Json{{"kind", "gr"}, {"size", number}};
            case Kind::Hypergraph: return ramsey::to_json(*graph);
            case Kind::Rel: return ramsey::to_json(*rel);
        }
        throw Error(Errc::InvalidArgument, "unreachable object kind");
    }
};

inline const char* mode_name(SearchMode mode) {
    return mode == SearchMode::Exhaustive ? "exhaustive" : "backtrack";
}

inline SearchMode mode_from_name(const std::string& name) {
    if (name == "exhaustive") return SearchMode::Exhaustive;
    if (name == "backtrack") return SearchMode::Backtrack;
    throw Error(Errc::InvalidArgument, "unknown mode \"" + name + "\"");
}

inline Json to_json(const ArrowReport& r) {
    Json j{{"verdict", verdict_name(r.verdict)},
           {"mode", mode_name(r.mode)},
           {"colors", r.colors},
           {"positions", r.positions},
           {"copies", r.copy_count},
           {"copy_size", r.copy_size},
           {"work", r.work},
           {"deterministic", r.deterministic}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.verdict == ArrowReport::Verdict::Witnessed)
        j["witness"] = Json{{"index", r.witness_index}, {"color", r.witness_color}};
    if (r.verdict == ArrowReport::Verdict::Refuted) j["bad_coloring"] = r.bad_coloring;
    return j;
}

}  // namespace ramsey
