#pragma once

#include <stdexcept>
#include <string>

namespace rankcrit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_linalg / subspaces
struct DimensionMismatch : Error { using Error::Error; };

// sampling
struct RetryExhausted : Error { using Error::Error; };

// pencils
struct NotSingular : Error { using Error::Error; };
struct NotTwoDimensional : Error { using Error::Error; };
struct NonSkewInput : Error { using Error::Error; };

// Lie algebras and representations
struct AntisymmetryViolation : Error { using Error::Error; };
struct JacobiViolation : Error { using Error::Error; };
struct CartanNotCommuting : Error { using Error::Error; };
struct NotClosedUnderBracket : Error { using Error::Error; };
struct NonSplit : Error { using Error::Error; };
struct NonDiagonalizable : Error { using Error::Error; };
struct NoInvariantForm : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct DegenerateKilling : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };

// cross-checks that should never fire unless the code is wrong
struct InternalInconsistency : Error { using Error::Error; };

// file / CLI input problems (exit code 2 territory)
struct ParseError : Error { using Error::Error; };

}  // namespace rankcrit
