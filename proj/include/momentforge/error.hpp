#pragma once

#include <stdexcept>
#include <string>

namespace momentforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (n, d) mismatch between operands, or an index outside 1..n.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Zero polynomial, zero vector, vanishing norm at an evaluation point.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Precondition violated by otherwise well-formed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace momentforge
