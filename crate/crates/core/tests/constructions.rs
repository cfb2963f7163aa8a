mod common;

use common::{diagram, matroid};
use cyclic_flats::catalog;
use cyclic_flats::constructions::{
    diffconfig_pair, free_m_cone, parallel_blowup, parallel_blowup_by_oracle, principal_extension,
    transversal_pair, twofilters,
};
use cyclic_flats::invariants::{configuration, find_isomorphism, g_invariant, GMethod};
use cyclic_flats::lpm::{lpm_matroid, mixed_pairs};
use cyclic_flats::transversal::mason_ingleton;
use cyclic_flats::{validate_z_axioms, CyclicFlatMatroid, FiniteLattice, Subset};
use proptest::prelude::*;

fn intersection_sizes(m: &CyclicFlatMatroid) -> Vec<usize> {
    let f = m.flat_sets();
    let mut out: Vec<usize> = (0..f.len())
        .flat_map(|i| (i + 1..f.len()).map(move |j| (i, j)))
        .map(|(i, j)| (f[i] & f[j]).len())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn check_swap(m: &CyclicFlatMatroid, x: usize, y: usize) -> Result<bool, TestCaseError> {
    let Ok(w) = twofilters(m, x, y) else { return Ok(false) };
    prop_assert!(validate_z_axioms(w.n(), w.flats()).unwrap().is_valid());
    prop_assert_eq!(w.flats().len(), m.flats().len());
    prop_assert_eq!(configuration(&w), configuration(m));
    prop_assert!(find_isomorphism(m, &w).is_none());
    let (before, after) = (intersection_sizes(m), intersection_sizes(&w));
    prop_assert!(before.iter().zip(&after).all(|(b, a)| a >= b));
    prop_assert!(after.iter().sum::<usize>() > before.iter().sum::<usize>());
    let mut swap: Vec<usize> = (1..=m.n()).collect();
    swap.swap(x - 1, y - 1);
    prop_assert_eq!(w.relabel(&swap), twofilters(m, y, x).unwrap());
    Ok(true)
}

proptest! {
    #[test]
    fn swaps_on_mixed_corner_pairs(d in diagram(9)) {
        let m = lpm_matroid(&d).unwrap();
        for (a, b) in mixed_pairs(&d).unwrap() {
            let (x, y) = (a.endpoint(), b.endpoint());
            if x < y {
                prop_assert!(check_swap(&m, x, y)?, "{} fails at ({}, {})", d, x, y);
            }
        }
    }

    #[test]
    fn swaps_on_random_matroids(m in matroid(9), x in 1usize..10, y in 1usize..10) {
        let (x, y) = (1 + (x - 1) % m.n(), 1 + (y - 1) % m.n());
        check_swap(&m, x, y)?;
    }

    #[test]
    fn principal_extensions_commute(m in matroid(7), xb in any::<u64>(), yb in any::<u64>()) {
        let g = m.ground().bits();
        let (x, y) = (Subset::from_bits(xb & g), Subset::from_bits(yb & g));
        let n = m.n();
        let one = principal_extension(&principal_extension(&m, x).unwrap(), y).unwrap();
        let two = principal_extension(&principal_extension(&m, y).unwrap(), x).unwrap();
        let mut swap: Vec<usize> = (1..=n + 2).collect();
        swap.swap(n, n + 1);
        prop_assert_eq!(one.relabel(&swap), two);
    }

    #[test]
    fn blowups_agree(m in matroid(5), k in 1usize..=3) {
        prop_assume!(m.n() * (k + 1) <= 16);
        prop_assert_eq!(parallel_blowup(&m, k).unwrap(), parallel_blowup_by_oracle(&m, k).unwrap());
    }
}

#[test]
fn free_point_on_a_line_makes_the_swap_eligible() {
    let m = catalog::two_disjoint_lines();
    let ext = principal_extension(&m, Subset::from_elems([1, 2, 3])).unwrap();
    assert_eq!(ext.flat_rank(Subset::from_elems([1, 2, 3, 7])), Some(2));
    assert!(twofilters(&ext, 7, 4).is_ok());
}

#[test]
fn blowups_keep_equal_flag_tables() {
    let (m, other) = diffconfig_pair(1, 1).unwrap();
    let g = |x: &CyclicFlatMatroid| g_invariant(&parallel_blowup(x, 1).unwrap(), GMethod::FlagCount).unwrap().counts;
    assert_eq!(g(&m), g(&other));
}

#[test]
fn cone_over_two_parallel_points() {
    let cone = free_m_cone(&CyclicFlatMatroid::uniform(1, 2).unwrap(), 1).unwrap();
    let expect = CyclicFlatMatroid::from_pairs(5, [(vec![], 0), (vec![1, 2], 1), (vec![1, 2, 3, 4, 5], 2)]).unwrap();
    assert_eq!(cone.matroid, expect);
    assert_eq!(cone.tip, 3);
}

#[test]
fn pair_from_a_diamond_with_a_pendant_top() {
    // 0 < a, b < c < top
    let l = FiniteLattice::from_covers(
        ["0", "a", "b", "c", "top"].map(String::from).to_vec(),
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
    )
    .unwrap();
    let (m, w) = transversal_pair(&l).unwrap();
    for x in [&m, &w] {
        assert!(mason_ingleton(x).unwrap().transversal);
        assert!(x.zlattice().is_isomorphic(&l));
    }
    assert_eq!(configuration(&m), configuration(&w));
    assert!(find_isomorphism(&m, &w).is_none());
}
