#pragma once

// Central tolerance record. Every threshold used by the library, the
// validators and the CLI report lives here so there is a single tuning
// surface.

namespace homroll::tol {

// matcore
inline constexpr double kMatExpRelative = 1e-12;       // for ||A|| <= 10
inline constexpr double kUniformGridRelative = 1e-12;  // SteppedSolution step jitter

// lie
inline constexpr double kBasisIndependence = 1e-12;  // normalized Gram determinant floor
inline constexpr double kCoordsClosure = 1e-9;       // bracket/Ad projection residual
inline constexpr double kMembershipDefault = 1e-9;   // ||g^T g - I||_F
inline constexpr double kRetractMaxDistance = 0.5;   // precondition for polar retraction
inline constexpr double kPolarConvergence = 1e-14;

// reductive
inline constexpr double kSubalgebraClosure = 1e-9;   // [h, h] subset h
inline constexpr double kReductivity = 1e-8;         // Ad_h(m) subset m
inline constexpr double kAlphaInvariance = 1e-8;     // Ad_h(alpha(X,Y)) = alpha(Ad_h X, Ad_h Y)
inline constexpr double kAlphaMetricSkew = 1e-9;     // skew-adjointness of alpha(X, .)
inline constexpr double kSplitSingular = 1e-12;      // joint-basis singularity floor
inline constexpr double kNullSpaceSingular = 1e-10;  // singular values treated as zero

// rolling
inline constexpr double kStateDriftHard = 1e-6;   // post-correction drift abort limit
inline constexpr double kDetFloor = 1e-8;         // |det S| lower bound
inline constexpr double kFiniteDiffStep = 1e-5;   // central differences in verifiers/tests

// CLI report thresholds (exit code 1 when exceeded)
inline constexpr double kNoSlipThreshold = 1e-5;
inline constexpr double kNoTwistThreshold = 1e-5;
inline constexpr double kSOrthogonalityThreshold = 1e-8;
inline constexpr double kGroupDriftThreshold = 1e-9;
inline constexpr double kCompareBase = 1e-5;  // deviation <= base * (1 + ||xi||)

}  // namespace homroll::tol
