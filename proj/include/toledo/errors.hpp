#pragma once

#include <stdexcept>
#include <string>

namespace toledo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signature validation failures.
struct NotCoprime : Error { using Error::Error; };
struct TooFewConePoints : Error { using Error::Error; };
struct ExcludedTriple : Error { using Error::Error; };
struct BadMultiplicity : Error { using Error::Error; };

// Divisor / family argument failures.
struct LengthMismatch : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };

// Cech oracle argument failures.
struct BadShape : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };

// Literal syntax failures.
struct ParseError : Error { using Error::Error; };

}  // namespace toledo
