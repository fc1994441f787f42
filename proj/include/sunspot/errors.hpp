#pragma once

#include <stdexcept>
#include <string>

namespace sunspot {

// A required hypothesis of an operation does not hold for the given input.
// The message names the failing condition and, where available, a witness.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A re-verification step contradicted a proven fact. This always indicates a
// bug in this library or a violated hypothesis upstream; the message carries
// a serialized diagnostic bundle sufficient to reproduce the configuration.
class TheoremViolation : public std::logic_error {
public:
  TheoremViolation(const std::string& what, std::string diagnostic_json)
      : std::logic_error(what), diagnostic(std::move(diagnostic_json)) {}
  std::string diagnostic;
};

class Graph6ParseError : public std::runtime_error {
public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

} // namespace sunspot
