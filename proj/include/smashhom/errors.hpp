#pragma once

#include <stdexcept>
#include <string>

namespace smashhom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exactmath
struct OrderMismatchError : Error { using Error::Error; };
struct NotRationalError : Error { using Error::Error; };
struct ZeroInverseError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// linalg
struct NotInvariantError : Error { using Error::Error; };
struct NonInvertibleError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };

// grouptheory
struct OrderExceededError : Error { using Error::Error; };
struct NonInvertibleGeneratorError : Error { using Error::Error; };

// closedform / oracle
struct NegativeDimensionError : Error { using Error::Error; };
struct NonIntegralInvariantDimError : Error { using Error::Error; };
struct NotInCentralizerError : Error { using Error::Error; };
struct SlotTooLargeError : Error { using Error::Error; };

// cli
struct SchemaError : Error { using Error::Error; };

}  // namespace smashhom
