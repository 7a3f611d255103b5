#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mdc {

// Base class for all domain errors thrown by the library.  `code()` is a
// stable machine-readable identifier; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define MDC_ERROR(Name)                                                  \
    struct Name : Error {                                                \
        explicit Name(const std::string& message = #Name)                \
            : Error(#Name, message) {}                                   \
    }

MDC_ERROR(SingularMatrix);
MDC_ERROR(NotUnimodular);
MDC_ERROR(DimensionMismatch);
MDC_ERROR(JumpNotInGroup);
MDC_ERROR(IdentityJump);
MDC_ERROR(NotSymmetric);
MDC_ERROR(MixedDirectedness);
MDC_ERROR(AlreadyConnected);
MDC_ERROR(NotAProductInstance);
MDC_ERROR(NotGenerating);
MDC_ERROR(WrongJumpCount);
MDC_ERROR(NotPrime);
MDC_ERROR(EvenPrime);
MDC_ERROR(FactorNotConnected);
MDC_ERROR(TooLarge);
MDC_ERROR(NotVertexTransitive);

#undef MDC_ERROR

// Malformed textual input (matrices, jump lists, graph files).  Reported
// separately from domain errors so the CLI can map it to usage exit codes.
struct ParseError : Error {
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

}  // namespace mdc
