#pragma once

#include <stdexcept>
#include <string>

namespace ballcover {

// Input violates a documented precondition (bad dimensions, CY condition,
// malformed parts, out-of-range sizes).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two computations that must agree did not. Always a bug, never bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A degeneration descriptor does not fit the SNC baseline it is applied to.
class descriptor_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ballcover
