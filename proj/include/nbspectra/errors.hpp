#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbspectra {

// Precondition violation on mathematically valid input (e.g. min degree too
// small for an operator that needs it).  CLI exit code 2.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a documented size cap of an exact algorithm.  CLI exit code 3.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input; carries the byte offset of the first bad byte.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t byte_offset)
      : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset(byte_offset) {}
  std::size_t byte_offset;
};

// Numerical failure (eigensolver non-convergence etc.).  CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nbspectra
