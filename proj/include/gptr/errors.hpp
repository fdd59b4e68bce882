#pragma once

#include <stdexcept>
#include <string>

namespace gptr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of vectors, matrices, meters or post-processings do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (e.g. a point outside S, o passed
/// where a nonzero effect is required, a trivial meter to normalize).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An object violates one of its invariants (normalization, validity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A resource cap was exceeded (range enumeration, outcome count).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Backend or dimension not supported by the requested procedure.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A named object (meter, restriction, state) does not exist in the model.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace gptr
