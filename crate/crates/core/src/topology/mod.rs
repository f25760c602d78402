//! Finite posets, order complexes and exact integer homology.

mod complex;
pub mod fixtures;
mod homology;
mod poset;
mod snf;

pub use complex::{order_complex, ComplexJson, SimplicialComplex};
pub use homology::{homology, reduced_acyclic, HomologyResult};
pub use poset::{is_cone, FinPoset, PosetJson};
pub use snf::{invariant_factors, SparseMatrix};
