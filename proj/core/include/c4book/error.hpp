#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace c4book {

enum class Errc {
  NonPrimeCharacteristic,
  CapExceeded,
  DivisionByZero,
  FieldMismatch,
  EmptyQuerySet,
  InternalInconsistency,
  MalformedGraph6,
  DomainError,
  NotPrimePower,
  NotC4Free,
  BudgetExhausted,
  AsymptoticRegimeNotReached,
  AttemptsExhausted,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every failure reported by the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed graph6 input; offset is the zero-based byte position of the
/// first offending byte.
class Graph6Error : public Error {
 public:
  Graph6Error(std::size_t offset, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a construction's default constants give a non-positive
/// degree floor. min_n is the smallest n for which the floor becomes >= 1.
class RegimeError : public Error {
 public:
  RegimeError(std::uint64_t min_n, const std::string& what);

  std::uint64_t min_n() const noexcept { return min_n_; }

 private:
  std::uint64_t min_n_;
};

}  // namespace c4book
