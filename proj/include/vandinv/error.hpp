#pragma once

#include <stdexcept>
#include <string>

namespace vandinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: order out of range, mismatched sizes, bad spec.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A dropped-node operation was asked to remove the only node.
class EmptySetError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Factorial or intermediate growth left the double exponent range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Zero barycentric weight or vanishing elimination pivot.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refuses inputs that would enumerate too many subsets.
class CombinatorialGuardError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

}  // namespace vandinv
