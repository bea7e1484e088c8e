#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siglab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 text. offset is the 0-based byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), reason_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  // The message without the offset suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Invalid vertex/edge reference or a precondition on structure not met.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace siglab
