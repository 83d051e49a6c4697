#ifndef FAIRDIV_ERRORS_HPP
#define FAIRDIV_ERRORS_HPP

#include <stdexcept>

namespace fairdiv {

// Malformed or inconsistent input (files, instances, allocations).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A procedure's stated precondition does not hold for the given input.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-check failed; indicates a bug, not a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fairdiv

#endif
