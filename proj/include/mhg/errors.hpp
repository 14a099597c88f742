#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation that needs a field was handed a composite modulus.
class NonPrimeModulus : public Error {
   public:
    using Error::Error;
};

/// A phase table, coefficient block, or dense export would exceed the configured entry limit.
class SizeLimit : public Error {
   public:
    using Error::Error;
};

class VertexOutOfRange : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// A phase table with f(0,...,0) != 0 was passed where a canonical one is required.
class NonCanonical : public Error {
   public:
    using Error::Error;
};

/// A reconstructed edge map failed to rebuild its source phase table. Indicates a solver bug.
class RoundTripFailure : public Error {
   public:
    using Error::Error;
};

/// The census would need more solver calls than the configured budget.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// Malformed JSON input. `path()` is a JSON pointer to the offending field.
class SchemaError : public Error {
   public:
    SchemaError(std::string path, const std::string &message)
        : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

}  // namespace mhg
