//! Finite lattices given by their order relation, with meet and join tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    ids: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from a reflexive order relation given as a matrix.
    /// The relation is transitively closed before checking.
    pub fn from_order(ids: Vec<String>, mut leq: Vec<Vec<bool>>) -> Result<Self> {
        let k = ids.len();
        if k == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        if leq.len() != k || leq.iter().any(|row| row.len() != k) {
            return Err(Error::NotALattice("order matrix has the wrong shape".into()));
        }
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for m in 0..k {
            for i in 0..k {
                if leq[i][m] {
                    for j in 0..k {
                        if leq[m][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::NotALattice(format!(
                        "{} and {} lie on a cycle",
                        ids[i], ids[j]
                    )));
                }
            }
        }
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for i in 0..k {
            for j in i..k {
                let m = extremal(k, |z| leq[z][i] && leq[z][j], |a, b| leq[b][a]).ok_or_else(
                    || Error::NotALattice(format!("{} and {} have no meet", ids[i], ids[j])),
                )?;
                let s = extremal(k, |z| leq[i][z] && leq[j][z], |a, b| leq[a][b]).ok_or_else(
                    || Error::NotALattice(format!("{} and {} have no join", ids[i], ids[j])),
                )?;
                meet[i][j] = m;
                meet[j][i] = m;
                join[i][j] = s;
                join[j][i] = s;
            }
        }
        let bottom = (0..k).fold(0, |acc, i| meet[acc][i]);
        let top = (0..k).fold(0, |acc, i| join[acc][i]);
        Ok(FiniteLattice {
            ids,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Builds a lattice from its cover relations `(lower, upper)`.
    pub fn from_covers(ids: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let k = ids.len();
        let mut leq = vec![vec![false; k]; k];
        for &(a, b) in covers {
            if a >= k || b >= k {
                return Err(Error::NotALattice(format!("cover ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::NotALattice(format!("{} covers itself", ids[a])));
            }
            leq[a][b] = true;
        }
        FiniteLattice::from_order(ids, leq)
    }

    /// Lattice with anonymous ids `0, 1, ...` from an order predicate.
    pub fn from_predicate(k: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let ids = (0..k).map(|i| i.to_string()).collect();
        let m = (0..k).map(|i| (0..k).map(|j| leq(i, j)).collect()).collect();
        FiniteLattice::from_order(ids, m)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// True when `b` covers `a`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && (0..self.len()).all(|z| !(self.lt(a, z) && self.lt(z, b)))
    }

    /// All cover pairs `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.covers(a, b)).collect()
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.covers(a, b)).collect()
    }

    pub fn is_chain(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| (0..k).all(|j| self.leq[i][j] || self.leq[j][i]))
    }

    /// The order dual; ids are kept.
    pub fn order_dual(&self) -> FiniteLattice {
        let k = self.len();
        let leq = (0..k)
            .map(|i| (0..k).map(|j| self.leq[j][i]).collect())
            .collect();
        FiniteLattice::from_order(self.ids.clone(), leq).expect("dual of a lattice is a lattice")
    }

    /// Sub-poset on `keep`, in the given order. Errors if it is not a lattice.
    pub fn induced(&self, keep: &[usize]) -> Result<FiniteLattice> {
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let leq = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.leq[i][j]).collect())
            .collect();
        FiniteLattice::from_order(ids, leq)
    }

    /// Canonical form of the unlabelled lattice.
    pub fn canonical(&self) -> CanonicalForm {
        let labels = vec![(0u16, 0u16); self.len()];
        canonical_form(0, &labels, |a, b| self.leq[a][b])
    }

    /// An order isomorphism onto `other` as an index map, if one exists.
    pub fn isomorphism(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let a = self.canonical();
        let b = other.canonical();
        if a.encoding != b.encoding {
            return None;
        }
        // `position[v]` is the canonical slot of node `v`.
        let mut slot_to_b = vec![0; b.position.len()];
        for (v, &p) in b.position.iter().enumerate() {
            slot_to_b[p] = v;
        }
        Some(a.position.iter().map(|&p| slot_to_b[p]).collect())
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            elements: self.ids.clone(),
            covers: self
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
                .collect(),
        }
    }

    pub fn from_json(json: &LatticeJson) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, id) in json.elements.iter().enumerate() {
            if index.insert(id.as_str(), i).is_some() {
                return Err(Error::Malformed(format!("repeated lattice element {id:?}")));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown lattice element {id:?}")))
        };
        let covers = json
            .covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        FiniteLattice::from_covers(json.elements.clone(), &covers)
    }
}

/// The unique element among those satisfying `member` that dominates all
/// others under `above(a, b)` (meaning `a` is above `b`).
fn extremal(
    k: usize,
    member: impl Fn(usize) -> bool,
    above: impl Fn(usize, usize) -> bool,
) -> Option<usize> {
    let cands: Vec<usize> = (0..k).filter(|&z| member(z)).collect();
    cands
        .iter()
        .copied()
        .find(|&c| cands.iter().all(|&d| above(c, d)))
}

/// Interchange form: `{"elements": [...], "covers": [["lower", "upper"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FiniteLattice {
        let ids = ["0", "a", "b", "1"].map(String::from).to_vec();
        FiniteLattice::from_covers(ids, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn diamond_operations() {
        let d = diamond();
        assert_eq!(d.meet(1, 2), 0);
        assert_eq!(d.join(1, 2), 3);
        assert_eq!((d.bottom(), d.top()), (0, 3));
        assert!(!d.is_chain());
        assert_eq!(d.cover_pairs().len(), 4);
    }

    #[test]
    fn rejects_non_lattices() {
        // Two maximal elements.
        let ids = ["0", "a", "b"].map(String::from).to_vec();
        assert!(FiniteLattice::from_covers(ids, &[(0, 1), (0, 2)]).is_err());
        // Bowtie: a, b both below c, d.
        let ids = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
        let covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
        assert!(FiniteLattice::from_covers(ids, &covers).is_err());
    }

    #[test]
    fn isomorphism_between_relabelled_diamonds() {
        let d = diamond();
        let ids = ["t", "x", "bot", "y"].map(String::from).to_vec();
        let e = FiniteLattice::from_covers(ids, &[(2, 1), (2, 3), (1, 0), (3, 0)]).unwrap();
        let map = d.isomorphism(&e).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(d.leq(a, b), e.leq(map[a], map[b]));
            }
        }
        let chain = FiniteLattice::from_predicate(4, |a, b| a <= b).unwrap();
        assert!(!d.is_isomorphic(&chain));
    }

    #[test]
    fn json_round_trip() {
        let d = diamond();
        let text = serde_json::to_string(&d.to_json()).unwrap();
        let back = FiniteLattice::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, d);
    }
}
