//! Finite bounded lattices with partial binary operations.
//!
//! The crate checks finite structures against the classes built on partial
//! t-norms (partial residuated lattices and their well and special
//! variants, partial co-residuated lattices, lattice effect algebras),
//! derives residuated implications from partial t-norms, enumerates
//! filters and strong filters, and builds quotient structures.

pub mod axiom;
pub mod bundle;
pub mod checkers;
pub mod cli;
pub mod derive;
pub mod enumerate;
pub mod families;
pub mod filters;
pub mod grid;
pub mod infer;
pub mod io;
pub mod lattice;
pub mod partial;
pub mod report;
pub mod verify;

pub use bundle::{ClassTag, StructureBundle};
pub use checkers::CheckReport;
pub use lattice::{Elem, Lattice};
pub use partial::{PartialOp, UnaryOp};
