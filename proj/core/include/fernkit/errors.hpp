#ifndef FERNKIT_ERRORS_HPP
#define FERNKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fernkit {

// Base class for all recoverable errors raised by the library. The CLI
// converts these into structured error objects; nothing here aborts.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape/ambient mismatch between operands.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// An operation required an invertible matrix and did not get one.
class SingularityError : public Error {
public:
  explicit SingularityError(const std::string& what) : Error(what) {}
};

// An argument is outside the operation's domain (bad index, not a
// bijection, not upper triangular, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation failed.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Malformed JSON input: parse failure or missing/ill-typed field.
class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

// The rejection-sampling generator ran out of attempts.
class GeneratorExhaustedError : public Error {
public:
  explicit GeneratorExhaustedError(const std::string& what) : Error(what) {}
};

}  // namespace fernkit

#endif  // FERNKIT_ERRORS_HPP
