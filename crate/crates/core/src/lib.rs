//! Free knots and free links.
//!
//! Diagrams are framed 4-valent graphs (equivalently, Gauss codes) taken
//! modulo Reidemeister moves. The crate computes the Turaev cobracket and
//! the two parity brackets, all valued in Z2-combinations of R2-irreducible
//! diagrams, and derives minimality and realizability results from them.

pub mod analysis;
pub mod brackets;
pub mod canon;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod moves;
pub mod parity;

pub use brackets::{alex_bracket, delta, kauffman_bracket, kdelta, smooth, FormalSum, Smoothing, SumContext};
pub use canon::{canonicalize, CanonicalCode};
pub use diagram::{from_framed, to_framed, FramedDiagram, GaussCode, Label};
pub use enumerate::enumerate_codes;
pub use moves::{reduce_r2, MoveInstance, MoveKind};
