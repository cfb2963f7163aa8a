//! Swapping one element into the cyclic flats of a second filter.
//!
//! With `Z_e` the cyclic flats containing `e`, the swap replaces each
//! `Y ∈ Z_y − Z_x` by `(Y − y) ∪ x` at the same rank. When both differences
//! are nonempty and every cross pair is non-modular the result is a matroid
//! with the same configuration that is not isomorphic to the original.

use crate::error::{Error, HypothesisPart, Result};
use crate::lpm::{lpm_matroid, mixed_pairs, transform, Diagram, Transform};
use crate::matroid::{validate_z_axioms, CyclicFlatMatroid, RankedSet, ValidationReport};

pub fn twofilters(m: &CyclicFlatMatroid, x: usize, y: usize) -> Result<CyclicFlatMatroid> {
    let n = m.n();
    if x == y || x == 0 || y == 0 || x > n || y > n {
        return Err(Error::OutOfBounds(format!(
            "need distinct elements of [{n}], got {x} and {y}"
        )));
    }
    let only_x: Vec<RankedSet> = m
        .flats()
        .iter()
        .copied()
        .filter(|f| f.set.contains(x) && !f.set.contains(y))
        .collect();
    let only_y: Vec<RankedSet> = m
        .flats()
        .iter()
        .copied()
        .filter(|f| f.set.contains(y) && !f.set.contains(x))
        .collect();
    if only_x.is_empty() || only_y.is_empty() {
        let (empty, label) = if only_x.is_empty() { (x, y) } else { (y, x) };
        return Err(Error::HypothesisFailure {
            part: HypothesisPart::NonemptyDifferences,
            detail: format!("every cyclic flat containing {empty} also contains {label}"),
            witness: only_x.iter().chain(&only_y).map(|f| f.set).collect(),
        });
    }
    for a in &only_x {
        for b in &only_y {
            if m.is_modular_pair(a.set, b.set) {
                return Err(Error::HypothesisFailure {
                    part: HypothesisPart::CrossPairsNonModular,
                    detail: format!("{} and {} form a modular pair", a.set, b.set),
                    witness: vec![a.set, b.set],
                });
            }
        }
    }
    let flats: Vec<RankedSet> = m
        .flats()
        .iter()
        .map(|f| {
            if f.set.contains(y) && !f.set.contains(x) {
                RankedSet::new(f.set.without(y).with(x), f.rank)
            } else {
                *f
            }
        })
        .collect();
    let mut sets: Vec<_> = flats.iter().map(|f| f.set).collect();
    sets.sort();
    if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Internal(format!("swapped flat {} collides with an existing one", w[0])));
    }
    match validate_z_axioms(n, &flats)? {
        ValidationReport::Valid => CyclicFlatMatroid::new(n, flats),
        ValidationReport::Violation { axiom, first, second } => Err(Error::Internal(format!(
            "swap broke {axiom:?} at {first}, {second}"
        ))),
    }
}

/// A matroid with the configuration of the diagram's matroid that is not
/// isomorphic to it. Uses the disjoint mixed pair `([a], [b, n])` with
/// `b - a` least (then `a` least); if every mixed pair overlaps, works in
/// the dual diagram, where the complements give a disjoint one.
pub fn lpm_witness(d: &Diagram) -> Result<CyclicFlatMatroid> {
    if let Some(m) = disjoint_witness(d)? {
        return Ok(m);
    }
    let flipped = transform(d, Transform::DualFlip);
    match disjoint_witness(&flipped)? {
        Some(w) => Ok(w.dual()),
        None => Err(Error::Internal(
            "neither the diagram nor its dual has a disjoint mixed pair".into(),
        )),
    }
}

fn disjoint_witness(d: &Diagram) -> Result<Option<CyclicFlatMatroid>> {
    let pairs = mixed_pairs(d)?;
    if pairs.is_empty() {
        return Err(Error::NoMixedPair);
    }
    let best = pairs
        .iter()
        .filter(|(a, b)| a.interval.is_disjoint(b.interval))
        .map(|(a, b)| (a.endpoint(), b.endpoint()))
        .min_by_key(|&(a, b)| (b - a, a));
    match best {
        Some((a, b)) => Ok(Some(twofilters(&lpm_matroid(d)?, a, b)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::subset::Subset;

    #[test]
    fn two_lines_become_two_meeting_lines() {
        let m = catalog::two_disjoint_lines();
        let swapped = twofilters(&m, 1, 4).unwrap();
        assert_eq!(swapped, catalog::two_meeting_lines());
    }

    #[test]
    fn uniform_fails_the_first_hypothesis() {
        let u = CyclicFlatMatroid::uniform(2, 4).unwrap();
        let err = twofilters(&u, 1, 2).unwrap_err();
        assert!(matches!(
            err,
            Error::HypothesisFailure { part: HypothesisPart::NonemptyDifferences, .. }
        ));
    }

    #[test]
    fn running_example_swaps_one_flat() {
        let m = lpm_matroid(&catalog::running_diagram()).unwrap();
        let w = twofilters(&m, 3, 4).unwrap();
        let changed: Vec<_> = w.flat_sets().into_iter().filter(|f| !m.is_cyclic_flat(*f)).collect();
        assert_eq!(changed, vec![Subset::from_elems([3, 5, 6, 7, 8, 9])]);
        assert_eq!(lpm_witness(&catalog::running_diagram()).unwrap(), w);
    }
}
