//! P-positions of Wythoff-type queen games.
//!
//! Tables are produced three independent ways and cross-checked:
//!
//! * [`solver`] classifies squares by exact retrograde search under a
//!   [`rules::MoveRule`];
//! * [`morphic`] reads tables off codings of fixed points of substitutions;
//! * [`closed_forms`] generates them from mex recursions, Beatty sequences
//!   and digit conditions.
//!
//! [`analysis`] compares the routes and evaluates coordinate-sum identities.

pub mod analysis;
pub mod closed_forms;
pub mod error;
pub mod morphic;
pub mod position;
pub mod rules;
pub mod solver;
pub mod sources;
pub mod table;
pub mod variant;

pub use error::{Error, Result};
pub use position::Position;
pub use rules::{MoveRule, RuleRegistry};
pub use solver::{SearchMode, Solver};
pub use table::PPositionTable;
pub use variant::QueenVariant;
