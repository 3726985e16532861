#pragma once

#include <stdexcept>
#include <string>

namespace cinkra {

// Search/enumeration was asked to go beyond its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or string (bad JSON shape, bad bit string, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cinkra
