#pragma once
#include <stdexcept>
#include <string>

namespace nestcone {

enum class ErrorCode {
  InvalidGenus,
  InvalidIndex,
  InvalidSpace,
  SpaceMismatch,
  RangeError,
  UnderDetermined,
  Inconsistent,
  NotK3,
  DimensionMismatch,
  EmptyInput,
  NotPointed,
  FunctionalNotPositive,
  UnknownTable,
  InvalidInput,
  ParseError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// parse errors carry the byte offset into the input
class ParseError : public Error {
 public:
  ParseError(size_t offset, const std::string& msg)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

}  // namespace nestcone
