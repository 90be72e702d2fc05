#pragma once

#include <stdexcept>
#include <string>

namespace pfshuffle {

/// Malformed or out-of-range user input (bad row text, index outside the
/// alphabet, mismatched polynomial contexts).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pfshuffle
