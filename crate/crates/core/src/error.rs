use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frequency denominators must be positive, got {m}:{n}")]
    ZeroFrequency { m: u32, n: u32 },

    /// Levels of a non-coprime oscillator carry sums of irreps.
    #[error("NonCoprime: gcd({m}, {n}) = {gcd}; levels would be reducible")]
    NonCoprime { m: u32, n: u32, gcd: u32 },

    #[error("label (N={level}, p={p}, q={q}) out of range for ratio {m}:{n} (need 1 <= p <= m, 1 <= q <= n)")]
    LabelOutOfRange { level: u32, p: u32, q: u32, m: u32, n: u32 },

    #[error("Fock index k={k} out of range 0..={level}")]
    IndexOutOfRange { k: u32, level: u32 },

    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),

    #[error("NotDivisible: structure function is not divisible by x(N+1-x)")]
    NotDivisible,

    #[error("WrongRatio: expected {expected}, got {m}:{n}")]
    WrongRatio { expected: &'static str, m: u32, n: u32 },

    #[error("TruncationTooSmall: irrep N={level} does not fit strictly inside the {x_max}x{y_max} oracle box")]
    TruncationTooSmall { level: u32, x_max: usize, y_max: usize },

    #[error("NotAnEigenvalue: {ell} leaves recurrence residual {residual:e}")]
    NotAnEigenvalue { ell: f64, residual: f64 },

    #[error("DegenerateSpectrum: eigenvalues {lower} and {upper} are not strictly separated")]
    DegenerateSpectrum { lower: f64, upper: f64 },

    #[error("tridiagonal eigensolver did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;
