//! Exact certification of the Yetter-Drinfeld-Long bimodule correspondence
//! for finite-dimensional Hopf algebras given by structure constants.
//!
//! Everything is an exact matrix over ℚ or GF(p); every identity is checked
//! as an equality of linear maps, reporting the first differing coordinate.

pub mod chain;
pub mod double;
pub mod error;
pub mod exec;
pub mod hopf;
pub mod linmap;
pub mod lr;
pub mod rep;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use exec::Exec;
pub use hopf::{Bialgebra, HopfAlgebra};
pub use linmap::{LinMap, SparseVec, Witness};
pub use lr::{LrBimodule, LrView};
pub use rep::{ActionStructure, CoactionStructure, Side, YdModule};
pub use report::{AxiomEntry, AxiomReport, Coverage};
pub use scalar::{FieldSpec, Scalar};
