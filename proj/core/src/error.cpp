#include "hmi/error.hpp"

namespace hmi {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

}  // namespace hmi
