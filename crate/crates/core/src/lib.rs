//! Serre's condition (R1) for edge rings of finite graphs.
//!
//! [`serre::satisfies_r1`] decides (R1) from the graph alone: regular
//! vertices, fundamental sets, and connectivity of what they leave behind.
//! [`lattice::oracle_r1`] reaches the same verdict independently, by exact
//! Hermite-normal-form arithmetic on the lattice spanned by the edge vectors.
//! [`audit`] runs the two against each other, together with the lattice
//! identities behind them.

pub mod audit;
pub mod error;
pub mod facets;
pub mod graph;
pub mod lattice;
pub mod serre;

pub use error::{Error, ParseError, Result};
pub use facets::{FacetDescriptor, SupportForm};
pub use graph::{Family, Graph, OddCycle, VertexSet};
pub use lattice::{IntVec, IntegerLattice};
pub use serre::{classify, satisfies_r1, ClassificationReport, R1Verdict, Scan};
