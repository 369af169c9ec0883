#pragma once

#include <stdexcept>
#include <string>

namespace bipolar {

/// Base of every error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two sets were combined whose universes differ.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed dataset input. `location()` is the 1-based line (CSV) or record index (JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : Error(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace bipolar
