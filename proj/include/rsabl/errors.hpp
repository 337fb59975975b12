#pragma once

#include <stdexcept>
#include <string>

namespace rsabl {

// Base class for recoverable errors. The CLI maps these to exit code 2;
// anything else escaping to main is an internal failure (exit 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (ragged CSV row, bad rule syntax, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid data: missing decision column, empty table, or a
// batch that does not fit the schema it is used with.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A value outside its attribute domain, e.g. a missing decision cell.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnknownAttribute : public Error {
public:
    using Error::Error;
};

class UnknownObject : public Error {
public:
    using Error::Error;
};

class AttributeAlreadyInBase : public Error {
public:
    using Error::Error;
};

// Exhaustive reduct search refused: too many condition attributes.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class EmptyBatch : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rsabl
