//! Invariants of matroids: the Tutte polynomial, the 𝒢-invariant, the
//! configuration, isomorphism testing and configuration-uniqueness
//! certificates.

mod certificate;
mod config;
mod ginv;
mod iso;
mod tutte;

pub use certificate::{uniqueness_certificate, Certificate};
pub use config::{configuration, configuration_dual, same_configuration, Configuration};
pub use ginv::{g_invariant, GInvariant, GMethod};
pub use iso::{are_isomorphic, find_isomorphism};
pub use tutte::{tutte, TuttePolynomial};
