#pragma once

#include <stdexcept>
#include <string>

namespace gdh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct VariableMismatch : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };
struct NonHomogeneous : Error { using Error::Error; };

// parameter algebra
struct ImproperParameters : Error { using Error::Error; };
struct NotDhSystem : Error { using Error::Error; };
struct UndefinedTransform : Error { using Error::Error; };
struct NilpotentDirection : Error { using Error::Error; };

// Papperitz / special functions
struct FuchsViolation : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct PoleOfC : Error { using Error::Error; };
struct ContinuationThroughSingularity : Error { using Error::Error; };
struct ResonantExponents : Error { using Error::Error; };
struct SingularArgument : Error { using Error::Error; };
struct LatticePoint : Error { using Error::Error; };

// integration / correspondence
struct PathThroughSingularity : Error { using Error::Error; };
struct CoincidentComponents : Error { using Error::Error; };
struct SingularValue : Error { using Error::Error; };
struct ZeroDerivative : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };

// morphisms
struct ConstraintViolated : Error { using Error::Error; };
struct PoleOfMap : Error { using Error::Error; };
struct SingularLocus : Error { using Error::Error; };
struct SymmetryViolated : Error { using Error::Error; };

// numerics
struct PoleEncountered : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };

// catalogs
struct UnknownEntry : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct CurveConstraintViolated : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };

} // namespace gdh
