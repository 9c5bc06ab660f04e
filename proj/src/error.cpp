#include "ado/error.hpp"

namespace ado {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonPureScale: return "NonPureScale";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonScalarTwist: return "NonScalarTwist";
    case ErrorKind::NonScalarResult: return "NonScalarResult";
    case ErrorKind::InversionFailure: return "InversionFailure";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::RecordInvalid: return "RecordInvalid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InconsistentResidues: return "InconsistentResidues";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::MissingGenus: return "MissingGenus";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace ado
