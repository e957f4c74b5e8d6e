#include "spiral/errors.hpp"

namespace spiral {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidType: return "InvalidType";
        case ErrorCode::InvalidTwist: return "InvalidTwist";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::OddGrading: return "OddGrading";
        case ErrorCode::NotDistinguished: return "NotDistinguished";
        case ErrorCode::GenericityFailure: return "GenericityFailure";
        case ErrorCode::EmptyFace: return "EmptyFace";
        case ErrorCode::NotConjugate: return "NotConjugate";
        case ErrorCode::IntegralityFailure: return "IntegralityFailure";
        case ErrorCode::LabelNotInSpiral: return "LabelNotInSpiral";
        case ErrorCode::NoCuspidalDatum: return "NoCuspidalDatum";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::ParameterMismatch: return "ParameterMismatch";
        case ErrorCode::ZeroDimensional: return "ZeroDimensional";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::DuplicateDatum: return "DuplicateDatum";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::DivisionFailure: return "DivisionFailure";
        case ErrorCode::NotInGroup: return "NotInGroup";
    }
    return "Unknown";
}

int exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::ParseError:
        case ErrorCode::InvalidType:
        case ErrorCode::InvalidTwist:
        case ErrorCode::ZeroDimensional:
        case ErrorCode::NotInGroup:
        case ErrorCode::LabelNotInSpiral:
        case ErrorCode::GroupTooLarge:
        case ErrorCode::NotConjugate:
            return 1;
        case ErrorCode::OrderMismatch:
        case ErrorCode::ParameterMismatch:
        case ErrorCode::DivisionFailure:
        case ErrorCode::IntegralityFailure:
        case ErrorCode::EmptyFace:
        case ErrorCode::NotNilpotent:
            return 3;
        default:
            return 2;
    }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace spiral
