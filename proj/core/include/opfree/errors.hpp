#pragma once

#include <stdexcept>
#include <string>

namespace opfree {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A combinatorial size guard was exceeded (the request is refused, never truncated).
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Operands of incompatible matrix or basis dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A product is longer than the Fock truncation can evaluate exactly.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Malformed input (crossing partition where a non-crossing one is required, bad index, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace opfree
