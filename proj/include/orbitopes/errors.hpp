#pragma once

#include <stdexcept>
#include <string>

namespace orbitopes {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRank : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct OrbitTooLarge : Error {
  using Error::Error;
};
struct NotFullDimensional : Error {
  using Error::Error;
};
struct SizeCapExceeded : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotSkewSymmetric : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct SymmetryViolation : Error {
  using Error::Error;
};
struct UnsupportedWeight : Error {
  using Error::Error;
};
struct NotMaterialized : Error {
  using Error::Error;
};
struct NotBiorbitope : Error {
  using Error::Error;
};
struct OverflowError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace orbitopes
