mod common;

use std::collections::BTreeMap;

use common::{matroid, matroid_and_perm};
use cyclic_flats::invariants::{
    configuration, find_isomorphism, g_invariant, same_configuration, tutte, GMethod,
};
use cyclic_flats::oracle::isomorphic_brute;
use num_bigint::BigUint;
use proptest::prelude::*;

/// Permutation histogram implied by the flag table. A permutation whose
/// prefixes have closures `F_0 ⊊ ... ⊊ F_r` picks, at a rank-0 step, one of
/// the unused elements of the current flat, and at a rank-1 step one of the
/// elements of the next difference.
fn permutations_from_flags(n: usize, flags: &BTreeMap<Vec<usize>, BigUint>) -> BTreeMap<Vec<usize>, BigUint> {
    let mut out = BTreeMap::new();
    for (sizes, count) in flags {
        let r = sizes.len() - 1;
        for bits in 0u32..1 << n {
            if bits.count_ones() as usize != r {
                continue;
            }
            let vector: Vec<usize> = (0..n).map(|t| (bits >> t & 1) as usize).collect();
            let mut ways = BigUint::from(1u32);
            let (mut level, mut flat) = (0, sizes[0]);
            for (t, &v) in vector.iter().enumerate() {
                let choices = if v == 1 {
                    level += 1;
                    flat += sizes[level];
                    sizes[level]
                } else {
                    flat.saturating_sub(t)
                };
                ways *= choices as u32;
            }
            if ways != BigUint::default() {
                *out.entry(vector).or_insert_with(BigUint::default) += &ways * count;
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn configuration_survives_relabelling((m, perm) in matroid_and_perm(10)) {
        let image = m.relabel(&perm);
        prop_assert_eq!(configuration(&m), configuration(&image));
        prop_assert_eq!(tutte(&m).unwrap(), tutte(&image).unwrap());
        let found = find_isomorphism(&m, &image);
        prop_assert!(found.is_some());
        prop_assert_eq!(m.relabel(&found.unwrap()), image);
    }

    #[test]
    fn flag_table_determines_the_permutation_scan(m in matroid(8)) {
        let flags = g_invariant(&m, GMethod::FlagCount).unwrap();
        let scan = g_invariant(&m, GMethod::PermutationScan).unwrap();
        prop_assert_eq!(permutations_from_flags(m.n(), &flags.counts), scan.counts);
    }

    #[test]
    fn isomorphism_search_agrees_with_brute_force(a in matroid(6), b in matroid(6)) {
        prop_assert_eq!(find_isomorphism(&a, &b).is_some(), isomorphic_brute(&a, &b));
        if isomorphic_brute(&a, &b) {
            prop_assert!(same_configuration(&a, &b));
        }
    }
}

#[test]
fn isomorphism_on_every_small_matroid_pair() {
    for n in 0..=4 {
        let all = cyclic_flats::oracle::all_labelled_matroids(n);
        for a in all.iter().step_by(7) {
            for b in &all {
                assert_eq!(find_isomorphism(a, b).is_some(), isomorphic_brute(a, b), "{a:?} {b:?}");
            }
        }
    }
}
