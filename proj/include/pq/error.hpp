#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pq {

enum class ErrorCode {
  IllegalCharacter,
  DimensionMismatch,
  NotSquare,
  IndexOutOfRange,
  InvalidMap,
  InvalidEmmentaler,
  NotIdempotent,
  InvalidWord,
};

// Name of the error code, e.g. "DimensionMismatch".
const char* to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported with this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class IllegalCharacterError : public Error {
 public:
  IllegalCharacterError(std::size_t position, char c);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pq
