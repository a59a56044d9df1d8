#pragma once

#include <stdexcept>
#include <string>

namespace rmlab {

// Bad argument or violated precondition. The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard enumeration or size guard.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed, e.g. an exact formula produced a
// non-integer count. Indicates a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An iterative solver exceeded its sweep budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rmlab
