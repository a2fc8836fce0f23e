#ifndef COALSPEC_ERROR_HPP
#define COALSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coalspec {

// Base class for all data/domain errors raised by the library.
struct error : std::runtime_error {
  explicit error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed input text; `offset` is the byte position of the first bad byte.
struct parse_error : error {
  parse_error(const std::string &what, std::size_t offset)
      : error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

} // namespace coalspec

#endif
