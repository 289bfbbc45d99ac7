#include "fank/error.hpp"

namespace fank {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::CompleteFan: return "CompleteFan";
    case ErrorCode::ImproperSplitting: return "ImproperSplitting";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::NotSubfan: return "NotSubfan";
    case ErrorCode::EmptySubfan: return "EmptySubfan";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::NotFwps: return "NotFwps";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

namespace {
std::string with_location(const std::string& message, std::size_t line, std::size_t column, const std::string& source) {
  std::string head = source.empty() ? "" : source + ": ";
  if (line == 0 && column == 0) return head + message;
  std::string loc = head;
  if (line) loc += "line " + std::to_string(line);
  if (column) loc += std::string(line ? ", " : "") + "column " + std::to_string(column);
  return loc + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source)
    : Error(ErrorCode::Parse, with_location(message, line, column, source)), message_(message), line_(line), column_(column) {}

}  // namespace fank
