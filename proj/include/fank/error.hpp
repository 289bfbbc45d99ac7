#pragma once

#include <stdexcept>
#include <string>

namespace fank {

enum class ErrorCode {
  DimensionMismatch,
  ZeroVector,
  Parse,
  NotStronglyConvex,
  NotAFace,
  InvalidFan,
  Unsupported,
  CompleteFan,
  ImproperSplitting,
  NotAMember,
  NotInImage,
  IncompatiblePair,
  NotSubfan,
  EmptySubfan,
  NotSmooth,
  NotFwps,
  UnknownExample,
  InvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in one of the text formats; `line` and `column` are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source = "");

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fank
