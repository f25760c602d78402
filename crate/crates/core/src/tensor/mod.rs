//! The quotient model of `(Ass ⊗ C_n)(k)`: raw representatives, their
//! canonical labelled graphs, and composition.

mod cover;
mod labelled;
mod raw;

pub use cover::{cover_check, in_a, RelationTable};
pub use labelled::{canonical_form, realize, tensor_compose, LabelledGraph};
pub use raw::{equivalent, raw_compose, RawRep};
