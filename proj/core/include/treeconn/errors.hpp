#pragma once

#include <stdexcept>
#include <string>

namespace treeconn {

// Malformed input or a violated precondition (loop, bad index, wrong graph class, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact search was asked to run on an instance larger than its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treeconn
