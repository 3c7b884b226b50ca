#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hochdef {

enum class ErrorKind {
  Syntax,
  DuplicateLabel,
  DanglingVertex,
  NonAdmissible,
  CyclicQuiver,
  DimensionMismatch,
  MismatchedAlgebra,
  DegreeMismatch,
  BudgetExceeded,
  BoundExceeded,
  NotACocycle,
  DecompositionFailure,
  NoSolution,
  NotCommutative,
  IndexOutOfRange,
  MissingRankData,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Error raised while reading one of the text formats. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hochdef
