#pragma once

#include <stdexcept>
#include <string>

namespace spiral {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    InvalidType,
    InvalidTwist,
    NotNilpotent,
    OddGrading,
    NotDistinguished,
    GenericityFailure,
    EmptyFace,
    NotConjugate,
    IntegralityFailure,
    LabelNotInSpiral,
    NoCuspidalDatum,
    OrderMismatch,
    ParameterMismatch,
    ZeroDimensional,
    GroupTooLarge,
    SchemaError,
    DuplicateDatum,
    TypeMismatch,
    DivisionFailure,
    NotInGroup,
};

const char* error_name(ErrorCode code);

/// Process exit status used by the command-line tool for an error of this kind.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace spiral
