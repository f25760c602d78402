//! Exact little `n`-cubes, the orders `<_i`, the cells `H(μ)` and the
//! feasibility engine behind them.

mod cells;
mod cube;
mod linear;
mod nerve;

pub use cells::{
    analyze_counterexample, berger_counterexample, cells_containing, in_cell, minimal_cell, minimal_elements,
    CounterexampleReport,
};
pub use cube::{compose_cubes, disjoint_interiors, less_i, Configuration, LittleCube};
pub use linear::{cell_system, is_feasible, CellMode, Constraint, LinearSystem};
pub use nerve::{cover_nerve, cover_nerve_acyclic, NerveReport};
