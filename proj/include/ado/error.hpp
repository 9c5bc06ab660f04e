#pragma once

#include <stdexcept>
#include <string>

namespace ado {

enum class ErrorKind {
    InvalidArgument,
    DivisionByZero,
    NonPureScale,
    ParityError,
    ZeroPolynomial,
    NonScalarTwist,
    NonScalarResult,
    InversionFailure,
    DecompositionFailure,
    CalibrationFailure,
    RecordInvalid,
    ParseError,
    InconsistentResidues,
    NotHomogeneous,
    MissingGenus,
    Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // True for failures that indicate a broken convention or a coding bug
    // rather than bad input.
    bool is_internal() const noexcept {
        switch (kind_) {
        case ErrorKind::NonScalarTwist:
        case ErrorKind::NonScalarResult:
        case ErrorKind::InversionFailure:
        case ErrorKind::DecompositionFailure:
        case ErrorKind::CalibrationFailure:
        case ErrorKind::NonPureScale:
        case ErrorKind::Overflow:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

}  // namespace ado
