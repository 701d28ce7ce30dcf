#pragma once

#include <stdexcept>
#include <string>

namespace dsbp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, numbers) or an I/O failure.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An object that refers to things that do not exist (unknown item ids,
/// wrong bin count, ...). Distinct from an infeasible but well-formed packing.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance admits no feasible packing at all.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search cap was hit before an answer was known.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the algorithms guarantee did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsbp
