use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max asymmetry {deviation:e})")]
    NotSymmetric { deviation: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("bipartition sizes must be positive (p = {p}, q = {q})")]
    EmptyPart { p: usize, q: usize },

    #[error("entry ({row}, {col}) is {value}, expected +1 or -1")]
    InvalidSign { row: usize, col: usize, value: i64 },

    #[error("pattern does not fit: {0}")]
    Pattern(String),

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("Gram eigenvalue {value:e} is negative")]
    InvalidGram { value: f64 },

    #[error("negative discriminant {value}")]
    NegativeDiscriminant { value: f64 },

    #[error("no closed form for an arbitrary signing")]
    NoClosedForm,
}
