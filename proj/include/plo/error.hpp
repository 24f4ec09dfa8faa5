#pragma once

#include <stdexcept>
#include <string>

namespace plo {

enum class ErrorKind {
  InvalidInterval,
  NotMonotone,
  EndpointsNotFixed,
  OutOfDomain,
  NotAnOrbital,
  NotInOrbital,
  NotSameOrbital,
  NotNested,
  PreconditionViolated,
  ContextOrbitalMismatch,
  CannotFit,
  ResourceLimit,
  ParseError,
  UnknownSuite,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures additionally carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace plo
