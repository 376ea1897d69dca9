#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vembed {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats, with a 0-based input position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A configured enumeration or search cap was hit; carries the partial count.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string& message, std::size_t partial_count)
      : Error(message), partial_count_(partial_count) {}

  std::size_t partial_count() const { return partial_count_; }

private:
  std::size_t partial_count_;
};

/// The request falls outside what the engine can represent (not a bug).
class Unsupported : public Error {
public:
  using Error::Error;
};

}  // namespace vembed
