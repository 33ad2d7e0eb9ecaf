#pragma once

#include <stdexcept>
#include <string>

namespace mgrrt {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A segment or direction vector shorter than the geometric tolerance.
struct DegenerateSegment : Error {
  using Error::Error;
};

/// Argument outside its documented domain (e.g. motor speed, Bezier parameter).
struct OutOfRange : Error {
  using Error::Error;
};

/// Thrust cannot overcome drag and gravity; no turning authority.
struct InsufficientThrust : Error {
  using Error::Error;
};

/// Query point lies inside an inflated obstacle or outside the usable bounds.
struct PointInCollision : Error {
  using Error::Error;
};

/// Scenario file or planning inputs fail validation.
struct InvalidScenario : Error {
  using Error::Error;
};

/// Result file fails validation.
struct InvalidResult : Error {
  using Error::Error;
};

/// An operation that requires at least one element received none.
struct EmptyInput : Error {
  using Error::Error;
};

/// Metrics requested on a plan that did not reach every goal.
struct IncompletePlan : Error {
  using Error::Error;
};

/// Embedded metrics disagree with a recomputation from the embedded paths.
struct MetricsMismatch : Error {
  using Error::Error;
};

/// Node reduction could not extend the path (unreachable for valid inputs).
struct NoProgress : Error {
  using Error::Error;
};

}  // namespace mgrrt
