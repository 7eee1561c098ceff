//! Partition and crystal combinatorics around the Mullineux involution.
//!
//! The crate covers:
//!
//! * [`partition`]: partitions, nodes, residues and the strictness classes;
//! * [`typea`]: Kleshchev's e-good lattice (the crystal of the basic
//!   representation of type `A_{e-1}^{(1)}`);
//! * [`mullineux`]: the Mullineux involution, its fixed points and the
//!   alternating-group count;
//! * [`twisted`]: the crystals of type `A_{2l}^{(2)}` and `D_{l+1}^{(2)}` on
//!   (double) restricted strict partitions;
//! * [`folding`]: folded Cartan matrices and the embedding of the twisted
//!   crystal onto Mullineux-fixed partitions;
//! * [`bijections`]: the bijection between distinct-part and self-conjugate
//!   partitions;
//! * [`characters`]: principal specialized characters and the counting
//!   identities for Mullineux-fixed partitions.

pub mod bijections;
pub mod characters;
pub mod error;
pub mod export;
pub mod folding;
pub mod mullineux;
pub mod partition;
mod signature;
pub mod twisted;
pub mod typea;

pub use error::{Error, Result};
pub use partition::{CrystalKind, Node, Partition, Residue, ResidueWord, StrictClass};
pub use signature::Letter;
