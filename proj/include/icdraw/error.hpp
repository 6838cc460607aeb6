#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icdraw {

enum class ErrorCode {
    EmptyGraph,
    DanglingEdgeEnd,
    DuplicateEdgeEnd,
    SelfLoop,
    NotConnected,
    EulerViolation,
    DummyDegreeNot4,
    EdgeCrossedTwice,
    CrossedEdgesShareEndpoint,
    NonSimpleRealGraph,
    AugmentationFailed,
    NotBiconnected,
    UnmatchedPattern,
    InvariantViolated,
    ClearanceViolation,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

/// Carries every issue found, the first one determines the code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::vector<std::string> details = {});

    ErrorCode code() const { return code_; }
    const std::vector<std::string>& details() const { return details_; }

private:
    ErrorCode code_;
    std::vector<std::string> details_;
};

}  // namespace icdraw
