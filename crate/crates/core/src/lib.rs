//! Edge ideals of vertex-weighted oriented graphs.
//!
//! The crate builds edge ideals and their ordinary and symbolic powers,
//! computes multigraded Betti numbers and regularity of arbitrary monomial
//! ideals, and checks a family of regularity bounds against concrete graphs.

pub mod complex;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod random;
pub mod regularity;
pub mod sweep;
pub mod symbolic;

pub use error::{Error, Result};
pub use graph::{VertexSet, WeightedOrientedGraph};
pub use linalg::Characteristic;
pub use monomial::{Monomial, MonomialIdeal, Ring};
pub use regularity::{regularity, Engine};
pub use symbolic::{edge_ideal, symbolic_power, SymbolicMethod};

/// Schema tag written into every JSON document.
pub const SCHEMA: &str = "woi/1";
