//! Transversal matroids with a prescribed lattice of cyclic flats, and
//! non-isomorphic pairs of them sharing a configuration.
//!
//! For `z` in a lattice `L` let `V_z = {y : y ≱ z}` and give `z` a block
//! `S_z` of `|V_z| + 1` new elements. The sets `A_y = ∪_{z ≰ y} S_z`, for `y`
//! below the top, present a matroid whose cyclic flats are
//! `F_z = ∪_{y ≤ z} S_y` with rank `|V_z|`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::matroid::{CyclicFlatMatroid, RankedSet, ORACLE_LIMIT};
use crate::subset::{Subset, MAX_GROUND};
use crate::transversal::{matroid_of, SetSystem};

use super::extension::{add_coloop, free_extension};
use super::twofilters::twofilters;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeRealization {
    pub presentation: SetSystem,
    pub matroid: CyclicFlatMatroid,
    /// `blocks[z]` is `S_z`, indexed like the lattice.
    pub blocks: Vec<Subset>,
    /// `flats[z]` is `F_z`.
    pub flats: Vec<Subset>,
}

/// Builds the realization. With `drop_loop` the single element of the
/// bottom block, a loop, is left out.
pub fn lattice_to_transversal(l: &FiniteLattice, drop_loop: bool) -> Result<LatticeRealization> {
    let k = l.len();
    let v: Vec<usize> = (0..k).map(|z| (0..k).filter(|&y| !l.leq(z, y)).count()).collect();
    let mut next = 1;
    let mut blocks = Vec::with_capacity(k);
    for z in 0..k {
        let size = if drop_loop && z == l.bottom() { 0 } else { v[z] + 1 };
        if next - 1 + size > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(next - 1 + size));
        }
        blocks.push(Subset::interval(next, next + size - 1));
        next += size;
    }
    let n = next - 1;
    let union = |pred: &dyn Fn(usize) -> bool| -> Subset {
        (0..k).filter(|&z| pred(z)).fold(Subset::EMPTY, |acc, z| acc | blocks[z])
    };
    let sets = (0..k)
        .filter(|&y| y != l.top())
        .map(|y| union(&|z| !l.leq(z, y)))
        .collect();
    let presentation = SetSystem::new(n, sets)?;
    let flats: Vec<Subset> = (0..k).map(|z| union(&|y| l.leq(y, z))).collect();
    let ranked = flats
        .iter()
        .zip(&v)
        .map(|(&f, &r)| RankedSet::new(f, r))
        .collect();
    let matroid = CyclicFlatMatroid::new(n, ranked)?;
    if n <= ORACLE_LIMIT && matroid_of(&presentation)? != matroid {
        return Err(Error::Internal("realization disagrees with its presentation".into()));
    }
    Ok(LatticeRealization {
        presentation,
        matroid,
        blocks,
        flats,
    })
}

/// Two non-isomorphic transversal matroids with the same configuration,
/// each with lattice of cyclic flats isomorphic to `l`.
///
/// When the top covers two elements `z` and `w`, the swap moves the least
/// element of `S_z` into `F_w` in place of the least element of `S_w`.
/// Otherwise the top chain is stripped, the pair is built on the ideal
/// below it, and each stripped level is restored by a coloop followed by
/// a free point.
pub fn transversal_pair(l: &FiniteLattice) -> Result<(CyclicFlatMatroid, CyclicFlatMatroid)> {
    if l.is_chain() {
        return Err(Error::Chain);
    }
    let mut top = l.top();
    let mut levels = 0;
    while let [only] = l.lower_covers(top)[..] {
        top = only;
        levels += 1;
    }
    let keep: Vec<usize> = (0..l.len()).filter(|&z| l.leq(z, top)).collect();
    let ideal = l.induced(&keep)?;
    let real = lattice_to_transversal(&ideal, false)?;
    let covers = ideal.lower_covers(ideal.top());
    let (z, w) = (covers[0], covers[1]);
    let e = real.blocks[z].min().expect("blocks below the top are nonempty");
    let f = real.blocks[w].min().expect("blocks below the top are nonempty");
    let mut m = real.matroid.clone();
    let mut swapped = twofilters(&m, e, f)?;
    for _ in 0..levels {
        m = free_extension(&add_coloop(&m)?)?;
        swapped = free_extension(&add_coloop(&swapped)?)?;
    }
    Ok((m, swapped))
}

/// Every lattice with at most `max` elements, one per isomorphism class,
/// ordered by size and then by canonical encoding.
pub fn small_lattices(max: usize) -> Vec<FiniteLattice> {
    let mut out = Vec::new();
    for k in 1..=max {
        let mut seen = BTreeMap::new();
        let middle: Vec<(usize, usize)> = (1..k.saturating_sub(1))
            .flat_map(|i| (i + 1..k - 1).map(move |j| (i, j)))
            .collect();
        for mask in 0u64..1 << middle.len() {
            let rel = |a: usize, b: usize| {
                a == b
                    || a == 0
                    || b == k - 1
                    || middle
                        .iter()
                        .enumerate()
                        .any(|(t, &p)| mask >> t & 1 == 1 && p == (a, b))
            };
            if let Ok(lat) = FiniteLattice::from_predicate(k, rel) {
                seen.entry(lat.canonical().encoding).or_insert(lat);
            }
        }
        out.extend(seen.into_values());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FiniteLattice {
        FiniteLattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn diamond_realization() {
        let r = lattice_to_transversal(&diamond(), false).unwrap();
        assert_eq!(r.matroid.n(), 11);
        let sizes: Vec<_> = r.blocks.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![1, 3, 3, 4]);
        let set_sizes: Vec<_> = r.presentation.sets().iter().map(|s| s.len()).collect();
        assert_eq!(set_sizes, vec![10, 7, 7]);
        let ranks: Vec<_> = r.flats.iter().map(|&f| r.matroid.flat_rank(f).unwrap()).collect();
        assert_eq!(ranks, vec![0, 2, 2, 3]);
        assert!(r.matroid.zlattice().is_isomorphic(&diamond()));
    }

    #[test]
    fn lattice_counts() {
        let counts: Vec<_> = (1..=6).map(|k| small_lattices(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 10, 25]);
    }

    #[test]
    fn chains_are_rejected() {
        let chain = FiniteLattice::from_predicate(3, |a, b| a <= b).unwrap();
        assert!(matches!(transversal_pair(&chain), Err(Error::Chain)));
    }
}
