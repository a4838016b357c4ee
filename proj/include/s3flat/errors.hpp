#pragma once

#include <stdexcept>
#include <string>

namespace s3flat {

/// Base class for every error this library raises on purpose.
struct S3FlatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : S3FlatError {
    using S3FlatError::S3FlatError;
};

/// A stated hypothesis of a construction failed; the message names it.
struct PreconditionViolation : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct PoleProximity : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct ArcLengthViolation : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct HemisphereViolation : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct DegenerateFrame : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct DegenerateImmersion : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct NotAsymptotic : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct ConstraintViolation : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct NonConstantAngle : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct DegenerateDenominator : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct SingularInitialData : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct StiffnessAbort : S3FlatError {
    using S3FlatError::S3FlatError;
};

struct DivisionByZeroComponent : S3FlatError {
    using S3FlatError::S3FlatError;
};

} // namespace s3flat
