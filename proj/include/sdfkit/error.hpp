#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdfkit {

enum class ErrorCode {
    InvalidOrder,
    OrderBoundExceeded,
    NotProper,
    NotAHomomorphism,
    NotAnIdeal,
    NotAMultiplicativeSet,
    RingMismatch,
    ZeroRingResult,
    ImproperExtension,
    TwoNotUnit,
    OutOfRange,
    UnitIdealResult,
    ModulusMismatch,
    DivisionByZeroPoly,
    DegreeBoundExceeded,
    ConstantPolynomial,
    NotPrime,
    ParseError,
    UnknownTheoremId,
    ExpressionParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` is what callers branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sdfkit
