#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

enum class ErrorCode {
    CapacityExceeded,
    OutOfQubits,
    InvalidArity,
    DeadQubit,
    OverlappingRegisters,
    NonFiniteAngle,
    ForgetMismatch,
    ForgetUndetermined,
    NotQfree,
    ArityMismatch,
    InvalidMarks,
    DuplicateEntries,
    BoundTooLarge,
    InvalidCardinality,
    NoCollisionFound,
    InvalidM,
};

const char* errorName(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace qsim
