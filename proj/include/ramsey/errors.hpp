#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ramsey {

/// Structured failure codes shared across the library.  Every throwing
/// operation reports one of these; tests and the CLI dispatch on the code
/// rather than the message text.
enum class Errc {
    DomainMismatch,
    SizeLimitExceeded,
    BudgetExceeded,
    MissingVariable,
    FirstOccurrenceOrder,
    ForeignSymbol,
    ArityMismatch,
    KindMismatch,
    SignatureMismatch,
    NotAbsolutelyOrdered,
    UnknownSymbol,
    NotAnEmbedding,
    PreAdjunctionViolated,
    ComponentArrowUnverified,
    IncompatibleCone,
    ClosureFailed,
    NoEmbedding,
    ClassCountMismatch,
    NotStrictlyIncreasing,
    Exhausted,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::MissingVariable: return "MissingVariable";
        case Errc::FirstOccurrenceOrder: return "FirstOccurrenceOrder";
        case Errc::ForeignSymbol: return "ForeignSymbol";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::KindMismatch: return "KindMismatch";
        case Errc::SignatureMismatch: return "SignatureMismatch";
        case Errc::NotAbsolutelyOrdered: return "NotAbsolutelyOrdered";
        case Errc::UnknownSymbol: return "UnknownSymbol";
        case Errc::NotAnEmbedding: return "NotAnEmbedding";
        case Errc::PreAdjunctionViolated: return "PreAdjunctionViolated";
        case Errc::ComponentArrowUnverified: return "ComponentArrowUnverified";
        case Errc::IncompatibleCone: return "IncompatibleCone";
        case Errc::ClosureFailed: return "ClosureFailed";
        case Errc::NoEmbedding: return "NoEmbedding";
        case Errc::ClassCountMismatch: return "ClassCountMismatch";
        case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
        case Errc::Exhausted: return "Exhausted";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Library exception.  `detail_a`/`detail_b` carry the indices named by the
/// contract (e.g. the variable index of a MissingVariable rejection).
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, long a = 0, long b = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(message)),
          code_(code),
          a_(a),
          b_(b) {}

    Errc code() const noexcept { return code_; }
    long detail_a() const noexcept { return a_; }
    long detail_b() const noexcept { return b_; }

private:
    Errc code_;
    long a_;
    long b_;
};

}  // namespace ramsey
