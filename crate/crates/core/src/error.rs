//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("field order {order} exceeds the size bound {bound}")]
    SizeBound { order: u64, bound: u64 },
    #[error("modulus override is not a monic irreducible polynomial of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus override is reducible")]
    ReducibleModulus,
    #[error("element {0} is not in the subfield GF(q)")]
    NotInSubfield(u64),
    #[error("square test in GF(q) is meaningless in characteristic 2")]
    EvenCharSquareTest,
    #[error("operation requires characteristic {expected}, field has characteristic {got}")]
    ParityMismatch { expected: &'static str, got: u64 },
    #[error("operation requires extension exponent e to be {0}")]
    BadExponent(&'static str),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("all-zero coordinate vector")]
    ZeroVector,
    #[error("the two points coincide")]
    EqualPoints,
    #[error("parameter b must lie outside GF(q)")]
    BInSubfield,
    #[error("point set has {got} points, expected {expected}")]
    WrongCardinality { got: usize, expected: usize },
    #[error("point is not on the Hermitian curve")]
    NotOnCurve,
    #[error("point is not of the required form")]
    BadPoint,
    #[error("projection center does not project")]
    ProjectFromCenter,
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}
