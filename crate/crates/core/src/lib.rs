//! Finite lattice and join-semilattice computations: tensor products via
//! bi-ideals, congruence lattices, and machine checks of the structural laws
//! connecting them.
//!
//! Carriers are index-based. Every structure keeps its elements in a fixed
//! deterministic order, so equal inputs always produce byte-identical
//! output, and labels exist purely for display and for addressing elements
//! from outside.

// Index loops over parallel tables are the house style here; iterator
// rewrites obscure which table a subscript walks.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod congruence;
pub mod dot;
pub mod error;
pub mod grid;
pub mod iso;
pub mod json;
pub mod lattice;
pub mod oracle;
mod partition;
pub mod poset;
pub mod semilattice;
pub mod suite;
pub mod tensor;
pub mod theorems;

pub use congruence::{congruence_lattice, ConLattice, LatticeCongruence};
pub use dot::{hasse_dot, lattice_dot, tensor_dot};
pub use error::{Error, Result};
pub use grid::{BitGrid, OpTable};
pub use iso::{are_isomorphic, FiniteAlgebra, IsoWitness};
pub use json::{load_spec, LatticeDoc, SemilatticeDoc};
pub use lattice::FinLattice;
pub use poset::FinPoset;
pub use semilattice::{FinJoinSemilattice, JoinCongruence, SemilatticeMap};
pub use suite::{run_suite, SuiteConfig};
pub use tensor::{tensor_product, BiIdeal, TensorAlgebra};
pub use theorems::{
    box_congruence, congruence_tensor, epsilon_a, epsilon_b, epsilon_map, full_sub_tensor_product,
    is_sub_tensor_product, odot, projection_congruence, sub_tensor_product, verify_embedding,
    verify_isomorphism, verify_quotient_factorization, CongruencePair, CongruenceTensor, Report,
    ReportStatus, SubTensorProduct,
};
