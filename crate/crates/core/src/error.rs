//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("cover references unknown label {0:?}")]
    UnknownLabel(String),

    #[error("cover relation has a cycle through {a:?} and {b:?}")]
    CycleDetected { a: String, b: String },

    #[error("structure has no elements")]
    EmptyStructure,

    #[error("poset is not a lattice: {a:?} and {b:?} lack a {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },

    #[error("poset is not a join-semilattice: {a:?} and {b:?} have no join")]
    MissingJoin { a: String, b: String },

    #[error("poset has no least element")]
    NoZero,

    #[error("operation table violates the semilattice laws: {0}")]
    InvalidJoinTable(String),

    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),

    #[error("size guard exceeded: construction reached {reached} elements, limit {limit}")]
    SizeGuardExceeded { reached: usize, limit: usize },

    #[error("lattice argument is not distributive")]
    NotDistributive,

    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("grid dimensions do not match the factor sizes")]
    DimensionMismatch,

    #[error("pure tensors are not oppositely comparable: ({a0},{b0}) vs ({a1},{b1})")]
    NotComparablePair {
        a0: String,
        b0: String,
        a1: String,
        b1: String,
    },

    #[error("elements {a:?} and {b:?} are not comparable")]
    NotComparable { a: String, b: String },

    #[error("table is not a bimorphism: {0}")]
    NotABimorphism(String),

    #[error("map is not a {{∨,0}}-homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("map is not an L-homomorphism: fails at ({a0}, {a1}, {b})")]
    NotAnLHomomorphism { a0: String, a1: String, b: String },

    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),

    #[error("member set is not a sub-tensor product: {0}")]
    NotASubTensorProduct(String),

    #[error("congruence carrier does not match the expected structure")]
    CarrierMismatch,

    #[error("lattice has fewer than two elements")]
    TrivialLattice,

    #[error("invalid structure document: {0}")]
    InvalidDocument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
