use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("period matrix must be square with genus >= 1, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("period matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("imaginary part of the period matrix is not positive definite")]
    ImaginaryPartNotPositiveDefinite,
    #[error("non-finite entry in input")]
    NonFinite,
    #[error("linear system for the harmonic form is singular")]
    SingularSystem,
    #[error("expected genus {expected}, got {actual}")]
    GenusMismatch { expected: usize, actual: usize },
    #[error("grid resolutions differ ({0} vs {1})")]
    ResolutionMismatch(usize, usize),
    #[error("grid resolution {resolution} too low for modes up to {max_mode}")]
    ResolutionTooLow { resolution: usize, max_mode: i64 },
    #[error("multiplier must be nonzero")]
    ZeroMultiplier,
    #[error("shape mismatch: expected {expected} components, got {actual}")]
    ShapeMismatch { expected: usize, actual: usize },
    #[error("pairing matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("kernels over different fields (q = {0} vs q = {1})")]
    FieldMismatch(u64, u64),
    #[error("kernel is not invariant under the diagonal group action")]
    NotInvariant,
    #[error("bundle {0} is not one of the catalogued Hecke fiber cases")]
    UnsupportedBundleCase(String),
    #[error("catalog case needs {needed} rational ramification points, but P^1(F_{q}) has only {available}")]
    TooFewRationalPoints { q: u64, needed: u64, available: u64 },
    #[error("(k, l) = (0, 0) has no normal form")]
    ZeroInput,
    #[error("({0}, {1}) is not a coprime pair")]
    NotCoprime(i64, i64),
    #[error("cannot parse complex number {0:?}")]
    ParseComplex(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("bad flag: {0}")]
    BadFlag(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
