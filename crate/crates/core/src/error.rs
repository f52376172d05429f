use thiserror::Error;

/// Errors raised by the algebraic and geometric kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} is outside 0..=3")]
    GradeOutOfRange(usize),

    #[error("paravector band {0} is outside 0..=4")]
    BandOutOfRange(usize),

    #[error("product of a {k}-paravector and a {l}-paravector exceeds grade 4")]
    GradeOverflow { k: usize, l: usize },

    #[error("multivector is not supported on the {k}-paravector band (off-band magnitude {residual:e})")]
    OffBand { k: usize, residual: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("location is undefined for a zero-weight element")]
    UndefinedLocation,

    #[error("points coincide; the line through them is degenerate")]
    DegenerateLine,

    #[error("points are collinear; the plane through them is degenerate")]
    DegeneratePlane,

    #[error("operator contains annihilation terms (magnitude {0:e})")]
    NotCreationOnly(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eye point lies on the projection plane")]
    EyeOnPlane,

    #[error("point lies in the eye plane parallel to the projection plane and projects to infinity")]
    PointAtInfinity,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
