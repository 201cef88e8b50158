#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlev {

/// Base of every error raised by the toolkit. Callers that only need to
/// distinguish "bad input data" from programming errors can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed version or range text. `position` is the byte offset of the
/// first offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Dependency spec forms the range grammar deliberately does not cover
/// (git URLs, dist-tags other than "latest", file paths, aliases).
class UnsupportedSpecError : public Error {
public:
  using Error::Error;
};

/// Registry documents, corpus layout or advisory snapshots that violate
/// their format contract.
class DataError : public Error {
public:
  using Error::Error;
};

/// A numeric procedure called outside its domain (zero own size, empty
/// sample, singular design, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace tlev
