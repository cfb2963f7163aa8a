mod common;

use common::{presentation, subsets};
use cyclic_flats::transversal::{mason_ingleton, matroid_of, SetSystem};
use cyclic_flats::Subset;
use proptest::prelude::*;

/// Rado: the largest matchable subset of `x` has size
/// `min over y ⊆ x of |x - y| + #{sets meeting y}`.
fn rado_rank(a: &SetSystem, x: Subset) -> usize {
    subsets(a.n())
        .filter(|y| y.is_subset(x))
        .map(|y| (x - y).len() + a.sets().iter().filter(|s| !s.is_disjoint(y)).count())
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn matching_rank_agrees_with_rado(a in presentation(8)) {
        for x in subsets(a.n()) {
            prop_assert_eq!(a.rank(x), rado_rank(&a, x));
        }
    }

    #[test]
    fn matching_rank_is_a_rank_function(a in presentation(9)) {
        for x in subsets(a.n()) {
            let r = a.rank(x);
            prop_assert!(r <= x.len());
            for e in 1..=a.n() {
                if !x.contains(e) {
                    let s = a.rank(x.with(e));
                    prop_assert!(s == r || s == r + 1);
                    for f in e + 1..=a.n() {
                        if !x.contains(f) {
                            // Submodularity in its local form.
                            let t = a.rank(x.with(f));
                            prop_assert!(a.rank(x.with(e).with(f)) + r <= s + t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn presentations_give_transversal_matroids(a in presentation(10)) {
        let m = matroid_of(&a).unwrap();
        prop_assert!(mason_ingleton(&m).unwrap().transversal);
        for f in m.flats() {
            prop_assert_eq!(f.rank, a.support(f.set).len());
        }
    }
}
