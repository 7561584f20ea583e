// Error taxonomy shared by all catclone modules. Every validation failure
// throws a subtype of Error so callers can map them to exit codes uniformly.
#pragma once

#include <stdexcept>
#include <string>

namespace catclone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linear-algebra kernel
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// states and density operators
struct NotNormalized : Error { using Error::Error; };
struct InvalidDensity : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct BadTargets : Error { using Error::Error; };
struct BadCut : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };

// canonical state labels
struct BadAlpha : Error { using Error::Error; };
struct BadTail : Error { using Error::Error; };
struct BadN : Error { using Error::Error; };
struct BadLabel : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct RankTooHigh : Error { using Error::Error; };

// protocols
struct BadDimension : Error { using Error::Error; };
struct IncompleteMeasurement : Error { using Error::Error; };

// witnesses and sweeps
struct SingularCoefficients : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };

} // namespace catclone
