use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),
    #[error("elements belong to different root systems")]
    MixedRootSystems,
    #[error("enumeration needs {required} elements but the cap is {cap}")]
    CapExceeded { required: u128, cap: usize },
    #[error("simple root index {index} out of range 1..={rank}")]
    InvalidSubset { index: usize, rank: usize },
    #[error("image of simple root {index} is not plus or minus a simple root")]
    NotStandardParabolic { index: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("not a composition of {n}: {parts:?}")]
    NotAComposition { n: usize, parts: Vec<usize> },
    #[error("operation requires a root system of type A only")]
    NotTypeA,
    #[error("operation requires a regular parabolic (empty mu subset)")]
    NotRegularParabolic,
    #[error("index {0} does not lie in the block's index set")]
    IndexNotInBlock(String),
    #[error("module kind {0} is not supported by this map")]
    UnsupportedKind(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
