#pragma once

#include <stdexcept>
#include <string>

namespace berge {

/// Input violates the structural invariants of a hypergraph.
class InvalidHypergraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented preconditions.
/// `clause()` is a short machine-readable tag such as "not connected".
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(std::string clause)
      : std::invalid_argument(clause), clause_(std::move(clause)) {}
  PreconditionError(std::string clause, const std::string& detail)
      : std::invalid_argument(clause + ": " + detail), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// An internal invariant broke. Never a legal outcome on valid input.
class ProofDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Replaying a proof trace diverged from the recorded branch sequence.
class ReplayMismatch : public ProofDefect {
 public:
  using ProofDefect::ProofDefect;
};

/// The exhaustive search hit its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace berge
