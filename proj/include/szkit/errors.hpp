#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace szkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. CLI exit 65.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Diagnostic {
  std::optional<std::size_t> gate;
  std::string message;
};

std::string describe(const std::vector<Diagnostic>& diags);

class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class DegreeBoundError : public InputError {
 public:
  using InputError::InputError;
};

// A guard or resource limit tripped. CLI exit 70.
class GuardError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public GuardError {
 public:
  using GuardError::GuardError;
};

class BitLengthExceeded : public GuardError {
 public:
  using GuardError::GuardError;
};

class BudgetExhausted : public GuardError {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t trials);
  std::uint64_t trials() const { return trials_; }

 private:
  std::uint64_t trials_;
};

}  // namespace szkit
