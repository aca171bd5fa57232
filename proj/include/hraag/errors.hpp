#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hraag {

/// Malformed or inconsistent input: bad labels, loops, unknown generators,
/// unparsable JSON. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain (e.g. a complexity
/// the enumerator does not support, or data lacking thick stars).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A data object failed verification against what it claims to certify.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of its node budget before finishing.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes_visited)
      : std::runtime_error(what), nodes_visited_(nodes_visited) {}

  std::uint64_t nodes_visited() const noexcept { return nodes_visited_; }

 private:
  std::uint64_t nodes_visited_;
};

}  // namespace hraag
