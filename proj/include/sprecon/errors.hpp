#ifndef SPRECON_ERRORS_HPP
#define SPRECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sprecon {

// An internal structural guarantee failed. During reconstruction this
// usually means the promised length bound is below the true layering-tree
// length, so the known prefix no longer determines the parts.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A query budget check failed while strict budgeting was enabled.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sprecon

#endif  // SPRECON_ERRORS_HPP
