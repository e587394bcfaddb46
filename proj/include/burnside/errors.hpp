#ifndef BURNSIDE_ERRORS_HPP
#define BURNSIDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace burnside {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's contract.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Operands live over different primes.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// A state the mathematics rules out was reached. This is always a bug; the
// counterexample is a serialized payload (usually JSON) of the offending data.
class InternalInvariantViolation : public Error {
 public:
  explicit InternalInvariantViolation(const std::string& what,
                                      std::string counterexample = {})
      : Error(what), counterexample_(std::move(counterexample)) {}

  const std::string& counterexample() const noexcept { return counterexample_; }

 private:
  std::string counterexample_;
};

// The exhaustive scan found a difference-preserving permutation that is not
// affine, or a count that disagrees with p * |M(U)|.
class PropositionViolated : public InternalInvariantViolation {
 public:
  using InternalInvariantViolation::InternalInvariantViolation;
};

// Group enumeration grew past its cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// Malformed input file; line is 1-based, 0 when not tied to a line.
class InputError : public InvalidInput {
 public:
  InputError(const std::string& what, std::size_t line)
      : InvalidInput(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace burnside

#endif  // BURNSIDE_ERRORS_HPP
