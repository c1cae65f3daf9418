use std::fmt;

use thiserror::Error;

/// Which side of an interlacing inequality failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `X[i+1][j] <= X[i][j]` failed.
    Lower,
    /// `X[i][j] <= X[i+1][j+1]` failed.
    Upper,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Lower => write!(f, "X[i+1][j] <= X[i][j]"),
            Bound::Upper => write!(f, "X[i][j] <= X[i+1][j+1]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("order violation at ({i},{j}): {bound} fails")]
    Order { i: usize, j: usize, bound: Bound },

    #[error("entry at ({i},{j}) is {value}, entries must be >= 1")]
    Domain { i: usize, j: usize, value: i64 },

    #[error("cell ({i},{j}) is outside the size-{n} triangle")]
    Index { n: usize, i: usize, j: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("triangle is not a Gog triangle")]
    NotGog,

    #[error("{family} object cannot be completed: {reason}")]
    NotExtensible { family: &'static str, reason: String },

    #[error("standard procedure cannot be inverted: {0}")]
    NotInvertible(String),

    #[error("not an (n,2) left Gog trapezoid")]
    NotLeftGog,

    #[error("not an (n,2) left GOGAm trapezoid")]
    NotLeftGogam,

    #[error("pentagon is not a member of the {0} family")]
    NotMember(&'static str),

    #[error("object is not a {0} triangle")]
    NotInFamily(&'static str),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("size {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
