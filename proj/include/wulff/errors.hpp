#ifndef WULFF_ERRORS_HPP
#define WULFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wulff {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Halfspace constraints do not bound the body.
struct UnboundedError : GeometryError {
  using GeometryError::GeometryError;
};

// Numerical rank deficiency where a full-rank configuration was required.
struct DegenerateError : GeometryError {
  using GeometryError::GeometryError;
};

struct DimensionMismatchError : GeometryError {
  using GeometryError::GeometryError;
};

struct ZeroVolumeError : GeometryError {
  using GeometryError::GeometryError;
};

struct QuadratureError : GeometryError {
  using GeometryError::GeometryError;
};

// A facet of the perturbed polytope vanished.
struct ParallelityLostError : GeometryError {
  using GeometryError::GeometryError;
};

struct NotVolumeNormalizedError : GeometryError {
  using GeometryError::GeometryError;
};

struct NotSingleDirectionError : GeometryError {
  using GeometryError::GeometryError;
};

// Fixed-point projection failed to converge.
struct NoConvergenceError : GeometryError {
  using GeometryError::GeometryError;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wulff

#endif
