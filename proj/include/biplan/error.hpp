#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biplan {

enum class ErrorCode {
    ParseError,
    InvalidWorkspace,
    StartOrGoalNotFree,
    StartOrGoalNotOnGrid,
    PointNotFree,
    DiscontinuousPlan,
    InvalidPlan,
    SpacingViolation,
    CapacityExceeded,
    GenerationExhausted,
    GeometryConstraintViolated,
    InvalidPartition,
    BudgetExceeded,
    NotOnLattice,
};

std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. The code is stable and is
/// what the CLI reports in its structured error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace biplan
