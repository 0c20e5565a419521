#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include "ramsey/json_io.hpp"

namespace ramsey {

/// FNV-1a over the canonical byte form; cheap, stable across platforms,
/// and good enough to pin certificate inputs (not a security boundary).
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_of(const Json& j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_dump(j))));
    return buf;
}

inline std::string verification_exhaustive() { return "exhaustive"; }
inline std::string verification_sampled(std::uint64_t seed) {
    return "sampled(" + std::to_string(seed) + ")";
}
inline std::string verification_budget() { return "budget-exceeded"; }

/// exhaustive < sampled < budget-exceeded; a composite claim is only as
/// strong as its weakest member.
inline int verification_rank(const std::string& v) {
    if (v == verification_exhaustive()) return 0;
    if (v.rfind("sampled(", 0) == 0) return 1;
    return 2;
}

inline std::string weaker_verification(const std::string& a, const std::string& b) {
    return verification_rank(a) >= verification_rank(b) ? a : b;
}

/// Assembles the canonical certificate.  The inputs object is hashed
/// before the hash field is spliced in, so the hash pins every input
/// value but not itself.
inline Json make_certificate(std::string stage, Json inputs, Json construction,
                             std::string verification) {
    inputs["hash"] = hash_of(inputs);
    return Json{{"stage", std::move(stage)},
                {"inputs", std::move(inputs)},
                {"construction", std::move(construction)},
                {"verification", std::move(verification)}};
}

/// First differing claim between a freshly recomputed certificate and a
/// stored one; empty when identical.  Used by the replay command to name
/// what was tampered with.
inline std::string first_certificate_diff(const Json& fresh, const Json& given) {
    for (const char* field : {"stage", "inputs", "construction", "verification"}) {
        const bool in_fresh = fresh.contains(field);
        const bool in_given = given.contains(field);
        if (in_fresh != in_given) return std::string(field) + " missing";
        if (!in_fresh) continue;
        if (fresh[field] == given[field]) continue;
        if (fresh[field].is_object() && given[field].is_object()) {
            for (const auto& [key, value] : fresh[field].items())
                if (!given[field].contains(key) || given[field][key] != value)
                    return std::string(field) + "." + key;
            for (const auto& [key, value] : given[field].items())
                if (!fresh[field].contains(key)) return std::string(field) + "." + key;
        }
        return field;
    }
    if (!(fresh == given)) return "extra fields";
    return "";
}

}  // namespace ramsey
