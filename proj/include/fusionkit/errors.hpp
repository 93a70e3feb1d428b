#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionkit {

enum class ErrorKind {
  InvalidSpec,
  InvalidGroup,
  InvalidAction,
  OrderLimit,
  NotInSubgroup,
  GroupMismatch,
  NumericalFailure,
  NotIntegral,
  NotNonnegative,
  ReciprocityViolation,
  NoPositiveSolution,
  HaarViolation,
  NonIntegralDimensions,
  NotNormal,
  NotAdmissible,
  SchemaMismatch,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// JSON/text input errors carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError, message + " at line " + std::to_string(line) +
                                         ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fusionkit
