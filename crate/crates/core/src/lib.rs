//! Quasi orders, digraphs, and the correspondence between the order
//! dimension of a quasi order and the dichromatic number of its pair digraph.
//!
//! The crate provides exact solvers for dichromatic number, chromatic number
//! and order dimension, certificate translations between acyclic covers and
//! extension families, digraph homomorphism search, and constructions over
//! finite branching sequences.

pub mod bits;
pub mod digraph;
pub mod error;
pub mod g0;
pub mod gen;
pub mod hom;
pub mod limits;
pub mod order;
pub mod reduction;
pub mod solvers;

pub use bits::BitMatrix;
pub use digraph::{Acyclicity, Cycle, Digraph};
pub use error::{Error, Result};
pub use hom::{find_homomorphism, verify_homomorphism, HomOutcome, HomViolation, HomWitness};
pub use limits::Limits;
pub use order::{QuasiOrder, QuotientPoset, StrictOrder};
pub use reduction::{
    build_ap, build_pg, closure_extend, cover_to_extensions, extensions_to_cover, AcyclicCover,
    ExtensionFamily, PairVertexMap, PgEmbedding,
};
pub use solvers::{
    chromatic_number, dichromatic_number, order_dimension, ChromaticResult, DicrResult, DimMethod,
    DimResult,
};
