#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmi {

// Base class for every error raised by the library. The CLI maps these to
// exit code 1; anything else escaping a command is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset` is the byte position in the parsed
// string where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hmi
