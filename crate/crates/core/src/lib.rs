//! Matroids represented by their cyclic flats.

pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod lpm;
pub mod matroid;
pub mod oracle;
pub mod subset;
pub mod transversal;
pub mod verify;

pub use error::{Axiom, Error, HypothesisPart, Result};
pub use lattice::FiniteLattice;
pub use matroid::{validate_z_axioms, CyclicFlatMatroid, RankedSet, ValidationReport};
pub use subset::Subset;

/// The guide's chapters, compiled and run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cyclic-flats.md")]
    mod cyclic_flats {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/transversal.md")]
    mod transversal {}
    #[doc = include_str!("../../../book/src/lattice-paths.md")]
    mod lattice_paths {}
    #[doc = include_str!("../../../book/src/swaps.md")]
    mod swaps {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/acceptance.md")]
    mod acceptance {}
}
