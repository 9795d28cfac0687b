#pragma once

#include <stdexcept>
#include <string>

namespace motzeta {

/// Base of every exception thrown by the library. Failed mathematical checks
/// are not exceptions; they come back as result values.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Operands live over different coefficient rings or truncation orders.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Division by an element that is not a unit where one is required.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole of a rational function.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Malformed input document (JSON schema or expression syntax).
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace motzeta
