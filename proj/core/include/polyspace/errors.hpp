#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

/// Base class for all polyspace errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input or violated operation precondition. The CLI maps this to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A condition that cannot occur for valid inputs; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace polyspace
