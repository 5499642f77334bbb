#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

/// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A degree, bit-length, term-count or dimension cap was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The rewriter consumed its recursion fuel. Indicates a bug, not bad input.
class FuelError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different carriers (domains, dimensions, grids) or a
/// point lies outside the domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unbound generator, malformed binding file, or unsupported model.
class BindingError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of a check does not hold (e.g. T(e1, e2) != e).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace riesz
