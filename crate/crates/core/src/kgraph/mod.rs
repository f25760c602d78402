//! The complete graphs poset operads `K`, `K_n`, Berger's `K^B_n` and the
//! augmented `K̂_n`.

mod complement;
mod element;
mod enumerate;
mod export;
mod operad;
mod order;
pub mod packed;

pub use complement::{
    base_graph, complementary_graphs, embed_reserved, grothendieck_leq, in_complement, phi, phi_inverse,
    restrict_along,
};
pub use element::{edge_count, pair_index, pairs, Arrow, CompleteGraphElement, EdgeState};
pub use enumerate::{enumerate, random_element};
pub use export::to_dot;
pub use operad::{is_sigma_free, operad_compose, sigma_action, unit};
pub use order::{arrow_pairs, is_acyclic, is_member, is_monochrome_acyclic, leq, polychrome_cycle, Variant};
