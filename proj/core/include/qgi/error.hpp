#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgi {

/// Malformed or semantically invalid user input (bad graph text, bad flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected while decoding text; carries the byte offset of the fault.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A size limit (vertex count, qubit count, exact-integer width) was exceeded.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed: the quantum pipeline disagreed with the classical oracle,
/// a phase was not an integer multiple of the oracle angle, and so on.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A persisted survey report could not be trusted (corrupt line, bad checksum).
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgi
