#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shodge {

/// Base of every error thrown by the library. Callers that only need a
/// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input errors: malformed or out-of-range user data.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidType : public InputError {
 public:
  using InputError::InputError;
};

class InvalidLevi : public InputError {
 public:
  using InputError::InputError;
};

class RankMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionViolated : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : InputError("parse error at position " + std::to_string(position) +
                   ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A (type, rank) pair that names no simple root system, e.g. E9 or D3.
class RankError : public InvalidType {
 public:
  using InvalidType::InvalidType;
};

class EnumerationBudgetExceeded : public Error {
 public:
  EnumerationBudgetExceeded(std::size_t budget)
      : Error("enumeration budget of " + std::to_string(budget) +
              " elements exceeded"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// Exponent data that cannot come from an equal-rank pair (G, H).
class NonIntegerEuler : public Error {
 public:
  using Error::Error;
};

// Internal-consistency failures. Reaching one of these on valid input is a bug.
class UnrecognizedDiagram : public Error {
 public:
  using Error::Error;
};

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace shodge
