//! Exact solvers: dichromatic number, chromatic number, order dimension.

pub mod chromatic;
pub mod dicr;
pub mod dimension;

pub use chromatic::{chromatic_number, ChromaticResult};
pub use dicr::{dichromatic_number, dicolour, DicrResult};
pub use dimension::{order_dimension, realizer_oracle, DimMethod, DimResult, RealizerOutcome};
