#pragma once

#include <stdexcept>
#include <string>

namespace planecol {

// Typed failure reasons. Every throwing operation documents which of these
// it can raise; tests match on the code, not the message text.
enum class ErrorCode {
    MalformedInput,          // unreadable/ill-formed file or argument
    NonSymmetricAdjacency,   // u lists v but v does not list u
    DuplicateNeighbor,       // v appears twice in a rotation
    SelfLoop,                // v lists itself
    IsolatedVertex,          // degree-0 vertex (no traceable face walk)
    EulerViolation,          // |V|-|E|+|F| != 2 on some component
    UnsupportedLength,       // chordal scan asked for a length other than 4/6
    TotalMismatch,           // initial charges do not sum to the scheme total
    AmbiguousRule,           // two rule-table cases match one pair, amounts differ
    MalformedPattern,        // configuration DSL invalid or empty
    DegreeBelowShownEdges,   // pattern vertex degree cap below its drawn edges
    WrongSize,               // candidate ordered set has the wrong size
    DuplicateVertex,         // repeated vertex in an ordered set / seed
    GraphTooSmall,           // completion impossible: fewer vertices than slots
    SizeLimit,               // exact solver asked to exceed its configured bound
    PreconditionViolated,    // documented precondition failed a re-check
    NotUniform,              // list assignment is not k-uniform
    BadParams,               // fixture generator given invalid parameters
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::NonSymmetricAdjacency: return "NonSymmetricAdjacency";
        case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::UnsupportedLength: return "UnsupportedLength";
        case ErrorCode::TotalMismatch: return "TotalMismatch";
        case ErrorCode::AmbiguousRule: return "AmbiguousRule";
        case ErrorCode::MalformedPattern: return "MalformedPattern";
        case ErrorCode::DegreeBelowShownEdges: return "DegreeBelowShownEdges";
        case ErrorCode::WrongSize: return "WrongSize";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::GraphTooSmall: return "GraphTooSmall";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotUniform: return "NotUniform";
        case ErrorCode::BadParams: return "BadParams";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace planecol
