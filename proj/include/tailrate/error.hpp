#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tailrate {

// Malformed graphs, out-of-range parameters, unknown families or keys.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration caps and search budgets. Distinct from a negative answer.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search that ran out of budget; payload is a JSON document describing the
// best partial result.
class BudgetError : public CapacityError {
 public:
  BudgetError(const std::string& what, std::string payload)
      : CapacityError(what), payload_(std::move(payload)) {}
  const std::string& payload() const { return payload_; }

 private:
  std::string payload_;
};

}  // namespace tailrate
