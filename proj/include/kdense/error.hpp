#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdense {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Argument outside the mathematical domain of an operation (e.g. k < |V_h|).
class DomainError : public Error {
public:
  using Error::Error;
};

// Integer arithmetic would exceed the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Brute-force oracle refused an instance above its size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace kdense
