#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fitch {

/// Thrown when an operation's precondition does not hold.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagnostic from one of the text parsers. `offset()` is the byte offset
/// into the input at which the problem was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& reason)
      : Error("offset " + std::to_string(offset) + ": " + reason),
        offset_(offset),
        reason_(reason) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace fitch
