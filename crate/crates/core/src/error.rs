use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("vertex count {0} exceeds the 63-vertex bitmask limit")]
    TooManyVertices(usize),

    #[error("vertex {0} is not a face; ideals with linear generators are unsupported")]
    LinearGeneratorUnsupported(usize),

    #[error("face family is not closed under taking subsets: {0}")]
    NotDownwardClosed(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("dimension {l} outside -1..={max}")]
    DimensionError { l: isize, max: isize },

    #[error("the void complex has no homology")]
    VoidComplex,

    #[error("complex on {n} vertices exceeds the Hochster cap of {cap}; pass a degree cap")]
    ComplexTooLarge { n: usize, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("not an f-vector: {0}")]
    NotAnFVector(String),

    #[error("diagrams do not share a Hilbert function")]
    NotSameHilbertFunction,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
