#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

// Requested coefficients lie outside the guaranteed q-window.
struct PrecisionError : std::runtime_error {
  int suggested_qtrunc;
  explicit PrecisionError(const std::string& what, int suggested)
      : std::runtime_error(what), suggested_qtrunc(suggested) {}
};

// Exhaustive search exceeded its declared budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace charlab
