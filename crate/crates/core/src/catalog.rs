//! Small named matroids and diagrams used throughout the tests and the
//! guide.

use crate::lpm::Diagram;
use crate::matroid::CyclicFlatMatroid;
use crate::subset::Subset;
use crate::transversal::SetSystem;

fn build(n: usize, pairs: &[(&[usize], usize)]) -> CyclicFlatMatroid {
    CyclicFlatMatroid::from_pairs(n, pairs.iter().map(|(s, r)| (s.iter().copied(), *r)))
        .expect("catalog entries satisfy the axioms")
}

/// Two skew lines `{1,2,3}` and `{4,5,6}` in rank 3.
pub fn two_disjoint_lines() -> CyclicFlatMatroid {
    build(6, &[(&[], 0), (&[1, 2, 3], 2), (&[4, 5, 6], 2), (&[1, 2, 3, 4, 5, 6], 3)])
}

/// Lines `{1,2,3}` and `{1,5,6}` meeting at 1; same configuration as
/// [`two_disjoint_lines`].
pub fn two_meeting_lines() -> CyclicFlatMatroid {
    build(6, &[(&[], 0), (&[1, 2, 3], 2), (&[1, 5, 6], 2), (&[1, 2, 3, 4, 5, 6], 3)])
}

/// The diagram between `Q = NNENNENEE` and `P = EENENNENN`.
pub fn running_diagram() -> Diagram {
    Diagram::parse("NNENNENEE", "EENENNENN").expect("valid paths")
}

/// Rank 3 on `[8]` with lines `{1,2,3}`, `{1,4,5}` and `{6,7,8}`; transversal.
pub fn two_concurrent_lines_and_a_skew_line() -> CyclicFlatMatroid {
    build(
        8,
        &[
            (&[], 0),
            (&[1, 2, 3], 2),
            (&[1, 4, 5], 2),
            (&[6, 7, 8], 2),
            (&[1, 2, 3, 4, 5, 6, 7, 8], 3),
        ],
    )
}

/// `([6], {1,2}, {3,4}, {5,6})`: the prism as a transversal matroid.
pub fn prism_presentation() -> SetSystem {
    let s = |v: &[usize]| Subset::from_elems(v.iter().copied());
    SetSystem::new(6, vec![Subset::full(6), s(&[1, 2]), s(&[3, 4]), s(&[5, 6])])
        .expect("valid presentation")
}
