#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (degree mismatch, malformed
/// partition, bad group parameters, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation that needs to enumerate group elements was asked to do so
/// above the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The k-tuple table of a closure computation would exceed the degree budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
