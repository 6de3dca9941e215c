#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

/// Base class for every error raised on bad input to the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The input exceeds the size supported by an exponential-time method.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (graph, digraph or word files, K-words).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace interlace
