#pragma once

#include <stdexcept>

namespace rhythmkit {

// Base of the toolkit's error taxonomy. The CLI maps the subclasses to exit
// codes: ConfigError -> 1, DataError -> 2, DegeneracyError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter, configuration, or violated API precondition.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input data: bad files, bad streams, shape
// mismatches, empty inputs.
class DataError : public Error {
public:
    using Error::Error;
};

// Numerically degenerate state: constant variance, all-zero weight rows.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

}  // namespace rhythmkit
