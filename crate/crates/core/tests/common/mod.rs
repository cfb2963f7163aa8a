#![allow(dead_code)]

use cyclic_flats::enumeration::diagrams_of_size;
use cyclic_flats::lpm::{lpm_matroid, Diagram};
use cyclic_flats::transversal::{matroid_of, SetSystem};
use cyclic_flats::{CyclicFlatMatroid, Subset};
use proptest::prelude::*;

/// A set system on `1..=max_n` elements with up to `n` sets.
pub fn presentation(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 0..=n).prop_map(move |bits| {
            SetSystem::new(n, bits.into_iter().map(Subset::from_bits).collect()).unwrap()
        })
    })
}

/// A connected diagram of size `1..=max`.
pub fn diagram(max: usize) -> impl Strategy<Value = Diagram> {
    (1..=max).prop_flat_map(|m| prop::sample::select(diagrams_of_size(m).unwrap()))
}

/// Transversal matroids, their duals, and lattice path matroids.
pub fn matroid(max_n: usize) -> impl Strategy<Value = CyclicFlatMatroid> {
    prop_oneof![
        presentation(max_n).prop_map(|a| matroid_of(&a).unwrap()),
        presentation(max_n).prop_map(|a| matroid_of(&a).unwrap().dual()),
        diagram(max_n.saturating_sub(1).max(1)).prop_map(|d| lpm_matroid(&d).unwrap()),
    ]
}

/// A matroid together with a permutation of its ground set.
pub fn matroid_and_perm(max_n: usize) -> impl Strategy<Value = (CyclicFlatMatroid, Vec<usize>)> {
    matroid(max_n).prop_flat_map(|m| {
        let n = m.n();
        (Just(m), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
    })
}

pub fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset::from_bits)
}
