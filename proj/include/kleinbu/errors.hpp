#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kleinbu {

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  std::string const& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// An operation was called outside its domain (e.g. projecting a word that is
/// not in ker g, or asking for a witness of a class with the Borsuk-Ulam
/// property).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The class is outside every family this library has a construction or
/// certificate for.
class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check between two independent computations failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kleinbu
