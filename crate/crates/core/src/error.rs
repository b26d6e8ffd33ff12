use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid additive group: {0}")]
    BadOrders(String),
    #[error("malformed multiplication table: {0}")]
    BadTable(String),
    #[error("invalid coordinates: {0}")]
    BadCoordinates(String),
    #[error("multiplication is not associative on basis triple ({i}, {j}, {l})")]
    NonAssociative { i: usize, j: usize, l: usize },
    #[error("product of basis elements {i} and {j} is not well defined for the additive orders")]
    IllDefined { i: usize, j: usize },
    #[error("declared unity is not a two-sided identity: {0}")]
    BadUnity(String),
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("exponent must be at least 1")]
    NonPositiveExponent,
    #[error("the `within` subset is not an ideal of the ambient ring: {0}")]
    WithinNotIdeal(String),
    #[error("{what} needs {needed} elements, above the exhaustive cap of {cap}")]
    CapExceeded { what: String, needed: u128, cap: u128 },
    #[error("element {0:?} is not idempotent")]
    NotIdempotent(Vec<u64>),
    #[error("map is not additive: image of basis element {0} has the wrong order")]
    NotAdditive(usize),
    #[error("map is not anti-multiplicative on pair x={x:?}, y={y:?}")]
    NotAntiMultiplicative { x: Vec<u64>, y: Vec<u64> },
    #[error("map is not involutive at x={0:?}")]
    NotInvolutive(Vec<u64>),
    #[error("involution belongs to a different ring")]
    InvolutionMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("table is not a group ({reason}); witness {witness:?}")]
    NotAGroup { reason: String, witness: Vec<usize> },
    #[error("{claim} requires p != {excluded}: {reason}")]
    PrimeConstraintViolated {
        claim: String,
        excluded: u64,
        reason: String,
    },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("invariant breach: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, needed: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what: what.into(),
            needed,
            cap,
        }
    }
}
