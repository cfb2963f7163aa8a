//! Isomorphism search. A bijection of ground sets is an isomorphism exactly
//! when it carries cyclic flats onto cyclic flats with equal ranks, so the
//! search assigns flats to flats and keeps the two ground sets partitioned
//! into matching classes of elements with equal membership so far. Once
//! every flat is assigned, any class-preserving bijection works.

use crate::matroid::CyclicFlatMatroid;
use crate::subset::Subset;

use super::config::same_configuration;

/// An isomorphism `perm` with `perm[e - 1]` the image of `e`, if one exists.
pub fn find_isomorphism(m: &CyclicFlatMatroid, n: &CyclicFlatMatroid) -> Option<Vec<usize>> {
    if m.n() != n.n() || m.flats().len() != n.flats().len() || !same_configuration(m, n) {
        return None;
    }
    let search = Search {
        a: m.flats().iter().map(|f| (f.set, f.rank)).collect(),
        b: n.flats().iter().map(|f| (f.set, f.rank)).collect(),
    };
    let mut used = vec![false; search.b.len()];
    let classes = (vec![m.ground()], vec![n.ground()]);
    let (ca, cb) = search.assign(0, &mut used, classes)?;
    let mut perm = vec![0; m.n()];
    for (x, y) in ca.iter().zip(&cb) {
        for (e, f) in x.iter().zip(y.iter()) {
            perm[e - 1] = f;
        }
    }
    Some(perm)
}

pub fn are_isomorphic(m: &CyclicFlatMatroid, n: &CyclicFlatMatroid) -> bool {
    find_isomorphism(m, n).is_some()
}

struct Search {
    a: Vec<(Subset, usize)>,
    b: Vec<(Subset, usize)>,
}

type Classes = (Vec<Subset>, Vec<Subset>);

impl Search {
    fn assign(&self, depth: usize, used: &mut [bool], classes: Classes) -> Option<Classes> {
        if depth == self.a.len() {
            return Some(classes);
        }
        let (f, rank) = self.a[depth];
        for j in 0..self.b.len() {
            let (g, r) = self.b[j];
            if used[j] || r != rank || g.len() != f.len() {
                continue;
            }
            let Some(next) = split(&classes, f, g) else {
                continue;
            };
            used[j] = true;
            if let Some(done) = self.assign(depth + 1, used, next) {
                return Some(done);
            }
            used[j] = false;
        }
        None
    }
}

/// Refines matching classes by membership in `f` and `g`; fails when some
/// class meets them in different numbers of elements.
fn split((xs, ys): &Classes, f: Subset, g: Subset) -> Option<Classes> {
    let mut out = (Vec::with_capacity(xs.len() * 2), Vec::with_capacity(ys.len() * 2));
    for (&x, &y) in xs.iter().zip(ys) {
        let (xi, yi) = (x & f, y & g);
        if xi.len() != yi.len() {
            return None;
        }
        for (p, q) in [(xi, yi), (x - f, y - g)] {
            if !p.is_empty() {
                out.0.push(p);
                out.1.push(q);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_relabelling() {
        let m = CyclicFlatMatroid::from_pairs(
            6,
            [(vec![], 0), (vec![1, 2, 3], 2), (vec![4, 5, 6], 2), ((1..=6).collect(), 3)],
        )
        .unwrap();
        let perm = vec![4, 6, 5, 2, 1, 3];
        let n = m.relabel(&perm);
        let found = find_isomorphism(&m, &n).unwrap();
        assert_eq!(m.relabel(&found), n);
    }

    #[test]
    fn two_lines_meeting_or_not() {
        let apart = CyclicFlatMatroid::from_pairs(
            6,
            [(vec![], 0), (vec![1, 2, 3], 2), (vec![4, 5, 6], 2), ((1..=6).collect(), 3)],
        )
        .unwrap();
        let meeting = CyclicFlatMatroid::from_pairs(
            6,
            [(vec![], 0), (vec![1, 2, 3], 2), (vec![1, 5, 6], 2), ((1..=6).collect(), 3)],
        )
        .unwrap();
        assert!(same_configuration(&apart, &meeting));
        assert_eq!(find_isomorphism(&apart, &meeting), None);
    }
}
