#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plc {

enum class ErrorKind {
    DivisionByZero,
    NonMonotone,
    CarrierViolation,
    CarrierMismatch,
    OutOfDomain,
    OutOfRange,
    NotInIsotropy,
    NotAGroup,
    NotSubgroup,
    NotExactFactorization,
    InjectionNotHom,
    BadSpec,
    ParseError,
    UnknownSuite,
    BadKind,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so callers
// (CLI, Python bindings, tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace plc
