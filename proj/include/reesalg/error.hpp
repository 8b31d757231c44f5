#pragma once

#include <stdexcept>
#include <string>

namespace reesalg {

// Machine-readable error taxonomy. The CLI maps each code to an exit status.
enum class ErrorCode {
  Parse,
  Validation,
  RingMismatch,
  Domain,
  Resource,
  Unsupported,
  InternalInconsistency,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::Parse, what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::Validation, what) {}
};

class RingMismatchError : public Error {
 public:
  RingMismatchError() : Error(ErrorCode::RingMismatch, "operands live in different rings") {}
};

// A precondition of an operation does not hold (zero divisor for a colon,
// rank-deficient module where an ideal module is required, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorCode::Resource, what) {}
};

class UnsupportedInstance : public Error {
 public:
  explicit UnsupportedInstance(const std::string& what)
      : Error(ErrorCode::Unsupported, what) {}
};

// Two independent computations disagreed, or a proven bound failed.
// Always an engine bug.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error(ErrorCode::InternalInconsistency, what) {}
};

}  // namespace reesalg
