#pragma once

#include <stdexcept>
#include <string>

namespace capkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (values, names, documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inputs living on different ground sets, unknown elements, size caps.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An object fails the axioms of the type it is being built as.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace capkit
