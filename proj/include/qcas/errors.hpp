#pragma once

#include <stdexcept>
#include <string>

namespace qcas {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// Raised when an exact division leaves a nonzero remainder. This is a
/// meaningful mathematical signal, not a crash: callers such as frac_reduce
/// probe divisibility with it.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct PoleAtPoint : Error {
  explicit PoleAtPoint(const std::string& what) : Error(what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& what) : Error(what) {}
};

/// Inconsistent linear system where solvability is guaranteed by theory;
/// treated as a fatal invariant violation.
struct SolveFailure : Error {
  explicit SolveFailure(const std::string& what) : Error(what) {}
};

/// A denominator factor survived a reduction that must terminate with a
/// polynomial. Signals an arithmetic bug, never expected input.
struct CancellationFailure : Error {
  explicit CancellationFailure(const std::string& what) : Error(what) {}
};

struct DegenerateWeight : Error {
  explicit DegenerateWeight(const std::string& what) : Error(what) {}
};

}  // namespace qcas
