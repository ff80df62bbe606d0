#ifndef SEPBOUND_ERRORS_HPP
#define SEPBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepbound {

// Base class for all toolkit errors. Exit-code classification for the CLI
// hangs off the two subclasses below.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was exceeded (group too large, state space too big, ...).
struct CapError : Error {
  explicit CapError(const std::string& msg) : Error(msg) {}
};

// An internal invariant that should be unreachable was violated. Signals a
// bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

struct NonDivisibleChain : Error {
  explicit NonDivisibleChain(const std::string& msg) : Error(msg) {}
};

struct GroupTooLarge : CapError {
  explicit GroupTooLarge(const std::string& msg) : CapError(msg) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& msg) : Error(msg) {}
};

struct ElementNotInGroup : Error {
  explicit ElementNotInGroup(const std::string& msg) : Error(msg) {}
};

struct VectorOutsideLattice : InternalError {
  explicit VectorOutsideLattice(const std::string& msg) : InternalError(msg) {}
};

struct NotInSpan : Error {
  explicit NotInSpan(const std::string& msg) : Error(msg) {}
};

struct NotInKernel : Error {
  explicit NotInKernel(const std::string& msg) : Error(msg) {}
};

struct DecompositionFailed : Error {
  explicit DecompositionFailed(const std::string& msg) : Error(msg) {}
};

struct NotZeroSum : Error {
  explicit NotZeroSum(const std::string& msg) : Error(msg) {}
};

struct BoundExceeded : InternalError {
  explicit BoundExceeded(const std::string& msg) : InternalError(msg) {}
};

struct WrongShape : Error {
  explicit WrongShape(const std::string& msg) : Error(msg) {}
};

struct DivisibilityViolated : Error {
  explicit DivisibilityViolated(const std::string& msg) : Error(msg) {}
};

struct BadPrime : Error {
  explicit BadPrime(const std::string& msg) : Error(msg) {}
};

struct StateSpaceTooLarge : CapError {
  explicit StateSpaceTooLarge(const std::string& msg) : CapError(msg) {}
};

struct NotInvariantMonomial : Error {
  explicit NotInvariantMonomial(const std::string& msg) : Error(msg) {}
};

struct OracleDisagreement : InternalError {
  explicit OracleDisagreement(const std::string& msg) : InternalError(msg) {}
};

}  // namespace sepbound

#endif
