#ifndef SYMCHAR2_ERRORS_HPP
#define SYMCHAR2_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace symchar2 {

enum class ErrorCode {
    DescriptorMismatch,
    DivisionByZero,
    NotASquare,
    NotInvertible,
    UnsupportedField,
    InvalidArgument,
    ParseError,
    // polynomials
    NotIrreducibleHint,
    NotIrreducible,
    ProductMismatch,
    NotCoprime,
    NotMonic,
    FactorizationFailed,
    // bilinear forms
    NotSymmetric,
    NonSquarePivot,
    ReductionFailed,
    // transfer forms
    NotEvenPolynomial,
    InseparableCore,
    SquareParameter,
    BadMultiplicity,
    NotSquareShape,
    ZeroConstantTerm,
    NotCoprimeBlocks,
    OutOfRange,
    DescentFailure,
    // realizer
    PlanInvariantViolated,
    NotRealizable,
    CertificateFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace symchar2

#endif
