#pragma once

#include <stdexcept>

namespace flagmajor {

// Thrown when an enumeration would exceed its configured size budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flagmajor
