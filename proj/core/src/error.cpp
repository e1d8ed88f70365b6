#include "hecl/error.hpp"

namespace hecl {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::IncompatibleFields: return "IncompatibleFields";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::Divisible: return "Divisible";
        case ErrorKind::GenusZero: return "GenusZero";
        case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorKind::UnsupportedM: return "UnsupportedM";
        case ErrorKind::UnsupportedEll: return "UnsupportedEll";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ZeroRhs: return "ZeroRhs";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hecl
