#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An address does not lie inside the cell it is interpreted against.
struct AddressOutsideCell : Error {
  using Error::Error;
};

// A geometric ray violates the membership bound 5*phi^2 < 3.
struct RaySeriesDivergent : Error {
  using Error::Error;
};

// A computation path requires finitely many loops where a ray contributes
// infinitely many.
struct RayGeometryUnsupported : Error {
  using Error::Error;
};

// Operation requires a divergence-free one-form.
struct NotDivergenceFree : Error {
  using Error::Error;
};

// Pointwise ratio requested at a junction where the reference normal part
// vanishes.
struct NormalPartZero : Error {
  using Error::Error;
};

// Mean integral over a cell of measure zero.
struct ZeroMeasureCell : Error {
  using Error::Error;
};

// Tangential part of the reference data does not exist.
struct TangentialPartMissing : Error {
  using Error::Error;
};

}  // namespace gasket
