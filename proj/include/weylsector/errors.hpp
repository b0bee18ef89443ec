#pragma once

#include <stdexcept>
#include <string>

namespace weylsector {

/// Bad user input: malformed expressions, invalid parameters, violated
/// preconditions. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to meet its contract (eigensolver did not
/// converge, residual too large, positivity violated). Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checked 64-bit rational arithmetic overflowed.
class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace weylsector
