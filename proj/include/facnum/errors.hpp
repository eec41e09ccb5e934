#pragma once

#include <stdexcept>
#include <string>

namespace facnum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (i > n, p = 2 for M(p^3), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or law-violating input (non-prime p, bad Cayley table, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal exactness or consistency check failed. Seeing one is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace facnum
