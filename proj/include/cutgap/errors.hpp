#pragma once

#include <stdexcept>

namespace cutgap {

/// A construction or solve was refused because it exceeds a resource budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration or malformed input file.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cutgap
