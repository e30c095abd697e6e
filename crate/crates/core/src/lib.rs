//! Exact combinatorics for symplectic Howe duality.

pub mod bicrystal;
pub mod characters;
pub mod crystal;
pub mod duality;
pub mod error;
pub mod laurent;
pub mod partfn;
pub mod partition;
pub mod verify;
pub mod weyl;

pub use bicrystal::{ChargeReport, KingIndex};
pub use characters::CharacterDecomposition;
pub use crystal::{Column, CrystalGraph, TensorElement};
pub use duality::{KingElement, KingEntry};
pub use error::{Error, Result};
pub use laurent::{LaurentPolynomial, Term};
pub use partfn::DiagramSpec;
pub use partition::{MultiPartition, Partition, Weight};
pub use verify::{Report, SweepConfig};
pub use weyl::{Family, RootSystemId, WeylElement};
