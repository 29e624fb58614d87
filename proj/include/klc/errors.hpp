#pragma once

#include <stdexcept>
#include <string>

namespace klc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a parabolic subgroup required to be finite is not.
struct InfiniteParabolic : Error {
  using Error::Error;
};

// Raised when an element is not the minimal representative of its coset.
struct NotMinimalRep : Error {
  using Error::Error;
};

// Raised when an element is not a regular double-coset representative.
struct NotRegularRep : Error {
  using Error::Error;
};

// Raised when an ambient index set is not Bruhat-downward closed.
struct AmbientNotClosed : Error {
  using Error::Error;
};

// Raised when a derived table index falls outside the required quotient.
struct IndexNotInQuotient : Error {
  using Error::Error;
};

}  // namespace klc
