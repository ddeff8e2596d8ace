use alloc::string::String;

/// Failures of the exact constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cos^2 + sin^2 != 1")]
    NotOnUnitCircle,
    #[error("curve is singular (zero discriminant)")]
    SingularCurve,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("parameters (m, n) lie on the discriminant locus")]
    SingularParams,
    #[error("point is excluded from the quartic/cubic correspondence")]
    ExcludedPoint,
    #[error("point is not on the quartic")]
    NotOnQuartic,
    #[error("quartic point yields a degenerate position on the line")]
    DegeneratePoint,
    #[error("square root is not rational: {0}")]
    SquareRootNotRational(String),
    #[error("parameters are inconsistent with the geometry: {0}")]
    InconsistentParams(String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("side lengths do not form a triangle")]
    NotATriangle,
    #[error("points do not form a parallelogram")]
    NotAParallelogram,
    #[error("search budget exhausted before any candidate was found")]
    BudgetExhausted,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
