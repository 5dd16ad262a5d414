#pragma once

#include <stdexcept>
#include <string>

namespace hexdom {

enum class ErrorCode {
    // plane_graph
    AsymmetricAdjacency,
    DuplicateNeighbor,
    SelfLoop,
    BadVertexId,
    EmptySourceSet,
    // marginal
    NotConnected,
    NotOuterplane,
    ChordPresent,
    EmptyInterior,
    TurnPreconditionViolated,
    LemmaViolation,
    // steiner
    DegreeTooHigh,
    TooManyTerminals,
    // surgery
    NotATree,
    InconsistentDevelopment,
    DominationFailure,
    // domination / generators
    InstanceTooLarge,
    SpecOutOfRange,
    LabelMismatch,
    // pipeline / cli
    CaseContradiction,
    InvalidInput,
    UsageError,
};

const char* error_code_name(ErrorCode c);

/// All library errors carry a machine-checkable code plus a human message
/// naming the offending vertex/edge where that makes sense.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace hexdom
