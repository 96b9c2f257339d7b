#pragma once

#include <stdexcept>
#include <string>

namespace dhd {

/// Malformed or unsupported encoded image payload.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate outside the raster it refers to.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Element index outside a fixed-size structure.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Shape descriptor undefined for this region (zero perimeter or diameter).
class DegenerateRegion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scene generator could not place a shape with the required separation.
class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dhd
