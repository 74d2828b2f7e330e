#pragma once

#include <stdexcept>
#include <string>

namespace ehrkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

/// The extra sample of an interpolated enumerator disagreed with direct counting.
/// This indicates a bug, not bad input.
class InterpolationGuardFailed : public Error {
public:
    using Error::Error;
};

class TooManyGenerators : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

/// Input is well formed but belongs to a class the requested operation does not handle.
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

} // namespace ehrkit
