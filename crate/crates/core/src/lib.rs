//! Minimization and canonization of good-for-games transition-based co-Büchi
//! automata (GFG-tNCWs), together with the semantic oracles used to check
//! every step.
//!
//! The main entry points are [`minimize::minimize`], which turns a
//! safe-deterministic (or, with determinization, arbitrary) co-Büchi automaton
//! into a minimal GFG-tNCW for the same language, and the saturation
//! functions in [`canon`], which make minimal automata unique up to
//! isomorphism.
//!
//! ```
//! use gfgmin::{fixtures, minimize::minimize, oracle};
//!
//! let tok = fixtures::tok();
//! let min = minimize(&tok, false).unwrap();
//! assert_eq!(min.num_states(), 3);
//! assert!(oracle::equivalent(&tok, &min));
//! ```

pub mod automaton;
pub mod canon;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod hoa;
pub mod iso;
pub mod minimize;
pub mod nice;
pub mod oracle;
pub mod random;
pub mod safe;

pub use automaton::{Alphabet, StateId, Symbol, Tncw, Transition};
pub use error::{Error, ParseError, ParseErrorKind, Result};
