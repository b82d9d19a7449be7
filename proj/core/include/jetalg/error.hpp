#pragma once

#include <stdexcept>
#include <string>

namespace jetalg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different charts, variable lists, orders or truncations.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An index or argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetalg
