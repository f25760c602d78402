//! Indexed families over finite posets, the Grothendieck construction and
//! colimits of finite set-valued diagrams.

mod colimit;
mod family;
mod graphs;
mod random;

pub use colimit::{colim_sets, verify_prop_a2, Colimit, PropA2Report};
pub use family::{grothendieck, integrate, IndexedFamily, PosetFunctor, SetDiagram};
pub use graphs::{
    complement_functor, cover_colimit_check, grothendieck_matches_phi, sampled_cell_family, tensor_colimit_check,
    ComplementFunctor, PointCheck,
};
pub use random::{random_family, random_poset, FamilyBounds};
