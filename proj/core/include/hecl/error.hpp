#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecl {

enum class ErrorKind {
    InvalidArgument,
    NotPrime,
    NotIrreducible,
    FieldTooLarge,
    ZeroElement,
    IncompatibleFields,
    OrderMismatch,
    IndexOutOfRange,
    Divisible,
    GenusZero,
    NonIntegralCoefficient,
    UnsupportedM,
    UnsupportedEll,
    BudgetExceeded,
    ZeroRhs,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so callers
/// (the CLI in particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace hecl
