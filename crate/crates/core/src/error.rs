use crate::subset::Subset;
use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {0} exceeds the 64-element limit")]
    GroundSetTooLarge(usize),

    #[error("set {set} is not a subset of [{n}]")]
    OutOfRange { set: Subset, n: usize },

    #[error("duplicate cyclic flat {0}")]
    DuplicateFlat(Subset),

    #[error("axiom {axiom} violated at ({first}, {second})")]
    AxiomViolation {
        axiom: Axiom,
        first: Subset,
        second: Subset,
    },

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("rank oracle is not a matroid rank function: {0}")]
    NotAMatroid(String),

    #[error("two-filters hypothesis ({part}) fails: {detail}")]
    HypothesisFailure {
        part: HypothesisPart,
        detail: String,
        witness: Vec<Subset>,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not connected")]
    Disconnected,

    #[error("diagram has a mixed pair")]
    Mixed,

    #[error("diagram has no mixed pair")]
    NoMixedPair,

    #[error("element {0} is a loop")]
    Loop(usize),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice is a chain")]
    Chain,

    #[error("matroid has loops")]
    HasLoops,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parameter out of range: {0}")]
    OutOfBounds(String),

    #[error("census mismatch at m={m}, r={r:?}, class={class}: brute {brute} != closed {closed}")]
    CensusMismatch {
        m: usize,
        r: Option<usize>,
        class: String,
        brute: u128,
        closed: u128,
    },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// The cyclic-flat axioms, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Z0,
    Z1,
    Z2,
    Z3,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Z0 => "Z0",
            Axiom::Z1 => "Z1",
            Axiom::Z2 => "Z2",
            Axiom::Z3 => "Z3",
        };
        f.write_str(s)
    }
}

/// Which half of the two-filters hypothesis failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisPart {
    /// One of the differences of the two filters is empty.
    NonemptyDifferences,
    /// Some cross pair is modular.
    CrossPairsNonModular,
}

impl std::fmt::Display for HypothesisPart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HypothesisPart::NonemptyDifferences => f.write_str("nonempty differences"),
            HypothesisPart::CrossPairsNonModular => f.write_str("non-modular cross pairs"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
