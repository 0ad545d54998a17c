//! Semantic decision procedures: lasso acceptance, breakpoint
//! determinization, language and safe-language containment, and a GFGness
//! game. Everything else in the crate is checked against these.

mod containment;
mod determinize;
mod game;
mod lasso;
mod prune;
mod safety;

pub use containment::{
    containment_matrix, counterexample, counterexample_cross, equivalence_matrix, equivalent, lang_contains, state_equiv,
    state_equiv_cross, Containment,
};
pub use determinize::{breakpoint_determinize, breakpoint_determinize_with_states, MacroState};
pub use game::{gfg_check, solve_parity, ParityGame, ParitySolution, Strategy};
pub use lasso::{accepts, random_lassos, LassoWord};
pub use prune::{count_prunings, enumerate_prunings, Prunings};
pub use safety::{safe_contains, safe_contains_cross, safe_live};
