//! Finite models of the complete graphs operads, little cubes cells, the
//! quotient model of `Ass ⊗ C_n`, and the order-complex homology used to check
//! them.

pub mod budget;
pub mod cubes;
pub mod error;
pub mod grothendieck;
pub mod kgraph;
pub mod perm;
pub mod rational;
pub mod tensor;
pub mod topology;
pub mod verify;

pub use budget::Budget;
pub use cubes::{Configuration, LittleCube};
pub use error::{Error, Result};
pub use kgraph::{CompleteGraphElement, EdgeState, Variant};
pub use perm::Permutation;
pub use rational::Rational;
