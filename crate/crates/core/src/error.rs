use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in partition {text:?}: {reason}")]
    Syntax { text: String, reason: String },

    #[error("partition parts must be positive, found {0}")]
    NonPositivePart(i64),

    #[error("exponent must be at least 1 in term {0:?}")]
    ZeroExponent(String),

    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: u32, min: u32 },

    #[error("n = {n} exceeds the full-graph bound {bound} (use --force to override)")]
    BoundExceeded { n: u32, bound: u32 },

    #[error("{0} is not a vertex of G_{1}")]
    UnknownVertex(String, u32),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(String, String),

    #[error("{0} is not a nontrivial rectangular partition")]
    NotRectangular(String),

    #[error("{0} has min(a, b) = 2: borderline ear, no tetrahedral witness")]
    DegenerateTetra(String),

    #[error("support roots must be distinct, got {0} twice")]
    SameRoot(String),

    #[error("{0} vertex set is empty")]
    EmptySet(&'static str),

    #[error("{0} set intersects the forbidden set")]
    Forbidden(&'static str),

    #[error("contour must be a nonempty proper subset of the vertex set")]
    BadContour,
}

pub type Result<T> = std::result::Result<T, Error>;
