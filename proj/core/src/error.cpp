#include "c4book/error.hpp"

namespace c4book {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::EmptyQuerySet: return "EmptyQuerySet";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::DomainError: return "DomainError";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotC4Free: return "NotC4Free";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::AsymptoticRegimeNotReached: return "AsymptoticRegimeNotReached";
    case Errc::AttemptsExhausted: return "AttemptsExhausted";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Graph6Error::Graph6Error(std::size_t offset, const std::string& what)
    : Error(Errc::MalformedGraph6, what + " (byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

RegimeError::RegimeError(std::uint64_t min_n, const std::string& what)
    : Error(Errc::AsymptoticRegimeNotReached, what), min_n_(min_n) {}

}  // namespace c4book
