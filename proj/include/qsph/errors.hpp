#pragma once

#include <stdexcept>
#include <string>

namespace qsph {

// Invalid input or configuration; the CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation produced a non-finite or inconsistent value; exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qsph
