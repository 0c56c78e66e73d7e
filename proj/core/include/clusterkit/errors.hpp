#pragma once

#include <stdexcept>
#include <string>

namespace clusterkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown family/rank pair or a matrix that is not a finite-type Cartan matrix.
class InvalidTypeError : public Error {
public:
  explicit InvalidTypeError(const std::string& what) : Error(what) {}
};

/// Letter, slot or position outside its admissible range.
class IndexError : public Error {
public:
  explicit IndexError(const std::string& what) : Error(what) {}
};

/// A weight difference that does not lie in the root lattice.
class LatticeError : public Error {
public:
  explicit LatticeError(const std::string& what) : Error(what) {}
};

/// Positive-root closure did not reach a fixpoint within its iteration cap.
class ClosureError : public Error {
public:
  explicit ClosureError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed (inexact Laurent division, broken flip, ...).
/// Raised only on implementation bugs or corrupted input.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

/// Malformed user input (words, type strings, JSON files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace clusterkit
