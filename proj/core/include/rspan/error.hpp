#pragma once

#include <stdexcept>
#include <string>

namespace rspan {

enum class ErrorCode {
    dimension_mismatch,
    invalid_argument,
    degenerate_polytope,
    precondition_violated,
    cap_exceeded,
    invariant_breach,
};

constexpr const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::degenerate_polytope: return "degenerate_polytope";
    case ErrorCode::precondition_violated: return "precondition_violated";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::invariant_breach: return "invariant_breach";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
/// `invariant_breach` is reserved for internal consistency checks; seeing one
/// means a kernel bug, not bad input.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace rspan
