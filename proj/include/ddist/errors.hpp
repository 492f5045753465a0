#pragma once

#include <stdexcept>
#include <string>

namespace ddist {

// Malformed or invalid input documents and arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (e.g. mixed dimensions).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A box handed to a slab-only routine is not a slab of the domain.
class SlabPreconditionError : public ContractError {
 public:
  using ContractError::ContractError;
};

// The brute-force grid would exceed its cell budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that is not defined for the given input.
class UndefinedResultError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The matrix gadget's depth layout did not match its calibration.
class ReductionIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddist
