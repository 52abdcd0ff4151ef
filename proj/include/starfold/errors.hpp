#pragma once

#include <stdexcept>
#include <string>

namespace starfold {

// Input has inconsistent variable counts (mixing ideals over different rings).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter is outside its documented domain (negative exponent, a > sum m_i, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A closed formula was requested outside the regime where it holds.
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// An ideal that must be fixed under permuting the variables is not.
struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded; raised before the work is attempted.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace starfold
