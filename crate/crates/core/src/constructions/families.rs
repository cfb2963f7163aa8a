//! Explicit pairs separating the configuration from the 𝒢-invariant, and
//! a tipless cone that is not determined by its configuration.

use crate::error::{Error, Result};
use crate::lpm::{lpm_matroid, Diagram};
use crate::matroid::{CyclicFlatMatroid, ORACLE_LIMIT};
use crate::subset::Subset;

use super::cone::free_m_cone;

/// `P = E^{2b+k} N^k E^b N^k E^b N^k`, `Q = N^k E^b N^k E^b N^k E^{2b+k}`.
pub fn diffconfig_diagram(b: usize, k: usize) -> Result<Diagram> {
    if b == 0 || k == 0 {
        return Err(Error::OutOfBounds("b and k must be positive".into()));
    }
    let rep = |c: char, t: usize| c.to_string().repeat(t);
    let (e, n) = ('E', 'N');
    let lower = [rep(e, 2 * b + k), rep(n, k), rep(e, b), rep(n, k), rep(e, b), rep(n, k)].concat();
    let upper = [rep(n, k), rep(e, b), rep(n, k), rep(e, b), rep(n, k), rep(e, 2 * b + k)].concat();
    Diagram::parse(&upper, &lower)
}

/// The lattice path matroid of [`diffconfig_diagram`] and the matroid on the
/// same ground set with cyclic flats `∅, W, Z, W∪Z, W∪X, W∪Y` and the whole
/// set, where `W, X, Y, Z` are the consecutive blocks of `b + k` elements.
/// The two share their 𝒢-invariant but not their configuration.
pub fn diffconfig_pair(b: usize, k: usize) -> Result<(CyclicFlatMatroid, CyclicFlatMatroid)> {
    let d = diffconfig_diagram(b, k)?;
    if d.n() > ORACLE_LIMIT {
        return Err(Error::Budget(format!("4(b + k) = {} exceeds {ORACLE_LIMIT}", d.n())));
    }
    let m = lpm_matroid(&d)?;
    let s = b + k;
    let block = |i: usize| Subset::interval((i - 1) * s + 1, i * s);
    let (w, x, y, z) = (block(1), block(2), block(3), block(4));
    let flats = [
        (Subset::EMPTY, 0),
        (w, k),
        (z, k),
        (w | z, 2 * k),
        (w | x, 2 * k),
        (w | y, 2 * k),
        (w | x | y | z, 3 * k),
    ];
    let other = CyclicFlatMatroid::from_pairs(4 * s, flats.iter().map(|&(f, r)| (f.iter(), r)))?;
    Ok((m, other))
}

/// `(Q_2(U_{3,4}) \ a, N)`. Labels: `w, x, y, z = 1..4`, then the cone points
/// `w', w'', x', ...` in pairs on `5..12`. `N` uses `w, x, y, z = 1..4`,
/// `w', x', y', z' = 5..8` and `a, b, c, d = 9..12`.
pub fn tipless_counterexample() -> Result<(CyclicFlatMatroid, CyclicFlatMatroid)> {
    let cone = free_m_cone(&CyclicFlatMatroid::uniform(3, 4)?, 2)?;
    let tipless = cone.tipless()?;
    let (w, x, y, z, w1, x1, y1, z1, a, b, c, d) = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12);
    let flats: Vec<(Vec<usize>, usize)> = vec![
        (vec![], 0),
        (vec![w, w1, a], 2),
        (vec![x, x1, a], 2),
        (vec![y, y1, a], 2),
        (vec![z, z1, a], 2),
        (vec![w, w1, x, x1, a, b], 3),
        (vec![w, w1, y, y1, a, c], 3),
        (vec![w, w1, z, z1, a, d], 3),
        (vec![x, x1, y, y1, a, d], 3),
        (vec![x, x1, z, z1, a, c], 3),
        (vec![y, y1, z, z1, a, b], 3),
        (vec![w, x, y, z], 3),
        ((1..=12).collect(), 4),
    ];
    let n = CyclicFlatMatroid::from_pairs(12, flats)?;
    Ok((tipless, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_pair() {
        let (m, other) = diffconfig_pair(1, 1).unwrap();
        let expect = CyclicFlatMatroid::from_pairs(
            8,
            [
                (vec![], 0),
                (vec![1, 2], 1),
                (vec![7, 8], 1),
                (vec![1, 2, 3, 4], 2),
                (vec![1, 2, 7, 8], 2),
                (vec![5, 6, 7, 8], 2),
                ((1..=8).collect(), 3),
            ],
        )
        .unwrap();
        assert_eq!(m, expect);
        assert!(other.is_cyclic_flat(Subset::from_elems([1, 2, 5, 6])));
        assert!(!other.is_cyclic_flat(Subset::from_elems([5, 6, 7, 8])));
    }

    #[test]
    fn diagram_words() {
        let d = diffconfig_diagram(1, 1).unwrap();
        assert_eq!(d.lower().to_string(), "EEENENEN");
        assert_eq!(d.upper().to_string(), "NENENEEE");
    }
}
