//! Spectral bounds for triangle-free graphs.
//!
//! The crate checks the inequalities `mu_1 <= -n mu_n / (mu_1 - mu_n)` and
//! `mu_1 + mu_n <= (3 - 2√2) n` on concrete and exhaustively enumerated
//! triangle-free graphs, builds the known triangle-free strongly regular
//! graphs, and enumerates feasible strongly regular parameter sets with
//! `a = 0` exactly.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod independence;
pub mod io;
pub mod spectral;
pub mod srg;
pub mod surd;

pub use error::{Error, Result};
pub use graph::{DegreeStats, Graph};
