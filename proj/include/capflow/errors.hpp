#pragma once

#include <stdexcept>
#include <string>

namespace capflow {

/// Invalid configuration or argument ranges detected at parse/validation time.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Degenerate geometry (non-positive radius, broken metric, ...).
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Failure to enforce the oblique boundary relation.
class BoundaryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Time step collapsed below representable resolution.
class StiffnessError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace capflow
