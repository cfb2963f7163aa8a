//! Matroids stored as their lattice of cyclic flats together with ranks.
//!
//! The rank of an arbitrary set is recovered from
//! `r(X) = min { r(F) + |X - F| : F cyclic flat }`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};
use crate::lattice::FiniteLattice;
use crate::subset::{Subset, MAX_GROUND};

/// Largest ground set for which a rank table over all subsets is built.
pub const ORACLE_LIMIT: usize = 22;

/// A set paired with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankedSet {
    pub set: Subset,
    pub rank: usize,
}

impl RankedSet {
    pub fn new(set: Subset, rank: usize) -> Self {
        RankedSet { set, rank }
    }

    pub fn nullity(&self) -> usize {
        self.set.len() - self.rank
    }
}

/// Outcome of checking the cyclic-flat axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationReport {
    Valid,
    Violation {
        axiom: Axiom,
        first: Subset,
        second: Subset,
    },
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid)
    }
}

/// Checks (Z0)-(Z3) and reports the first failure in axiom order. Within an
/// axiom the witness pair is least in the (size, lex) order of flats.
pub fn validate_z_axioms(n: usize, flats: &[RankedSet]) -> Result<ValidationReport> {
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut sorted = flats.to_vec();
    sorted.sort_by(|a, b| a.set.size_lex_cmp(b.set));
    for w in sorted.windows(2) {
        if w[0].set == w[1].set {
            return Err(Error::DuplicateFlat(w[0].set));
        }
    }
    if let Some(f) = sorted.iter().find(|f| !f.set.within(n)) {
        return Err(Error::OutOfRange { set: f.set, n });
    }
    let violation = |axiom, first, second| {
        Ok(ValidationReport::Violation {
            axiom,
            first,
            second,
        })
    };
    let k = sorted.len();
    if k == 0 {
        return violation(Axiom::Z0, Subset::EMPTY, Subset::EMPTY);
    }
    let sets: Vec<Subset> = sorted.iter().map(|f| f.set).collect();
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i..k {
            let lower: Vec<usize> = (0..k)
                .filter(|&z| sets[z].is_subset(sets[i] & sets[j]))
                .collect();
            let upper: Vec<usize> = (0..k)
                .filter(|&z| (sets[i] | sets[j]).is_subset(sets[z]))
                .collect();
            let m = lower
                .iter()
                .copied()
                .find(|&c| lower.iter().all(|&d| sets[d].is_subset(sets[c])));
            let s = upper
                .iter()
                .copied()
                .find(|&c| upper.iter().all(|&d| sets[c].is_subset(sets[d])));
            match (m, s) {
                (Some(m), Some(s)) => {
                    meet[i][j] = m;
                    meet[j][i] = m;
                    join[i][j] = s;
                    join[j][i] = s;
                }
                _ => return violation(Axiom::Z0, sets[i], sets[j]),
            }
        }
    }
    // After sorting by size the least set, if any, comes first.
    if sorted[0].rank != 0 {
        return violation(Axiom::Z1, sets[0], sets[0]);
    }
    for i in 0..k {
        for j in i + 1..k {
            if sets[i].is_proper_subset(sets[j]) {
                let (ri, rj) = (sorted[i].rank, sorted[j].rank);
                let gap = (sets[j] - sets[i]).len();
                if !(ri < rj && rj - ri < gap) {
                    return violation(Axiom::Z2, sets[i], sets[j]);
                }
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if sets[i].is_subset(sets[j]) || sets[j].is_subset(sets[i]) {
                continue;
            }
            let (m, s) = (meet[i][j], join[i][j]);
            let excess = ((sets[i] & sets[j]) - sets[m]).len();
            if sorted[s].rank + sorted[m].rank + excess > sorted[i].rank + sorted[j].rank {
                return violation(Axiom::Z3, sets[i], sets[j]);
            }
        }
    }
    Ok(ValidationReport::Valid)
}

/// A matroid on `[n]` given by its cyclic flats and their ranks.
///
/// Flats are kept sorted by size, then lexicographically, so two equal
/// matroids compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicFlatMatroid {
    n: usize,
    flats: Vec<RankedSet>,
}

impl CyclicFlatMatroid {
    /// Validates the axioms and builds the matroid.
    pub fn new(n: usize, flats: Vec<RankedSet>) -> Result<Self> {
        match validate_z_axioms(n, &flats)? {
            ValidationReport::Valid => Ok(Self::new_unchecked(n, flats)),
            ValidationReport::Violation {
                axiom,
                first,
                second,
            } => Err(Error::AxiomViolation {
                axiom,
                first,
                second,
            }),
        }
    }

    /// Convenience constructor from `(elements, rank)` pairs.
    pub fn from_pairs<I, S>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: IntoIterator<Item = usize>,
    {
        let flats = pairs
            .into_iter()
            .map(|(s, r)| RankedSet::new(Subset::from_elems(s), r))
            .collect();
        Self::new(n, flats)
    }

    pub(crate) fn new_unchecked(n: usize, mut flats: Vec<RankedSet>) -> Self {
        flats.sort_by(|a, b| a.set.size_lex_cmp(b.set));
        CyclicFlatMatroid { n, flats }
    }

    /// The free matroid on `[n]`.
    pub fn free(n: usize) -> Self {
        Self::new_unchecked(n, vec![RankedSet::new(Subset::EMPTY, 0)])
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::OutOfBounds(format!("U_{{{r},{n}}} needs r <= n")));
        }
        let mut flats = vec![RankedSet::new(Subset::EMPTY, 0)];
        if r == 0 {
            flats = vec![RankedSet::new(Subset::full(n), 0)];
        } else if r < n {
            flats.push(RankedSet::new(Subset::full(n), r));
        }
        Self::new(n, flats)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn flats(&self) -> &[RankedSet] {
        &self.flats
    }

    pub fn flat_sets(&self) -> Vec<Subset> {
        self.flats.iter().map(|f| f.set).collect()
    }

    /// The least cyclic flat, which is the set of loops.
    pub fn loops(&self) -> Subset {
        self.flats[0].set
    }

    pub fn top_flat(&self) -> RankedSet {
        *self.flats.last().unwrap()
    }

    /// Elements outside the greatest cyclic flat.
    pub fn coloops(&self) -> Subset {
        self.ground() - self.top_flat().set
    }

    pub fn rank_of_matroid(&self) -> usize {
        let top = self.top_flat();
        top.rank + (self.n - top.set.len())
    }

    pub fn rank(&self, x: Subset) -> usize {
        self.flats
            .iter()
            .map(|f| f.rank + (x - f.set).len())
            .min()
            .unwrap()
    }

    pub fn nullity(&self, x: Subset) -> usize {
        x.len() - self.rank(x)
    }

    pub fn is_cyclic_flat(&self, x: Subset) -> bool {
        self.flats.iter().any(|f| f.set == x)
    }

    pub fn flat_rank(&self, x: Subset) -> Option<usize> {
        self.flats.iter().find(|f| f.set == x).map(|f| f.rank)
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        let mut cl = x;
        for e in (self.ground() - x).iter() {
            if self.rank(x.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    /// Coloops of the restriction to `x`.
    pub fn coloops_of_restriction(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        x.iter().filter(|&e| self.rank(x.without(e)) < r).collect()
    }

    pub fn is_cyclic(&self, x: Subset) -> bool {
        self.coloops_of_restriction(x).is_empty()
    }

    pub fn is_modular_pair(&self, x: Subset, y: Subset) -> bool {
        self.rank(x) + self.rank(y) == self.rank(x | y) + self.rank(x & y)
    }

    /// Lattice join of two cyclic flats.
    pub fn flat_join(&self, a: Subset, b: Subset) -> Subset {
        self.closure(a | b)
    }

    /// Lattice meet of two cyclic flats.
    pub fn flat_meet(&self, a: Subset, b: Subset) -> Subset {
        let x = a & b;
        x - self.coloops_of_restriction(x)
    }

    /// The lattice of cyclic flats; node `i` is `self.flats()[i]`.
    pub fn zlattice(&self) -> FiniteLattice {
        let ids = self.flats.iter().map(|f| f.set.to_string()).collect();
        let leq = self
            .flats
            .iter()
            .map(|a| self.flats.iter().map(|b| a.set.is_subset(b.set)).collect())
            .collect();
        FiniteLattice::from_order(ids, leq).expect("cyclic flats form a lattice")
    }

    pub fn dual(&self) -> CyclicFlatMatroid {
        let e = self.ground();
        let rm = self.rank_of_matroid();
        let flats = self
            .flats
            .iter()
            .map(|f| {
                let c = e - f.set;
                RankedSet::new(c, c.len() + f.rank - rm)
            })
            .collect();
        Self::new_unchecked(self.n, flats)
    }

    /// Image under the relabelling `perm[e - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> CyclicFlatMatroid {
        assert_eq!(perm.len(), self.n, "permutation has the wrong length");
        let flats = self
            .flats
            .iter()
            .map(|f| RankedSet::new(f.set.map(perm), f.rank))
            .collect();
        Self::new_unchecked(self.n, flats)
    }

    /// Restriction to `x`, relabelled onto `[|x|]` preserving order.
    pub fn restrict(&self, x: Subset) -> Result<CyclicFlatMatroid> {
        let elems = x.to_vec();
        CyclicFlatMatroid::from_rank_oracle(elems.len(), |s| {
            self.rank(s.iter().map(|i| elems[i - 1]).collect())
        })
    }

    /// Deletion of `x`, relabelled onto `[n - |x|]` preserving order.
    pub fn delete(&self, x: Subset) -> Result<CyclicFlatMatroid> {
        self.restrict(self.ground() - x)
    }

    /// Every flat of the matroid with its rank, ordered by (size, lex).
    /// Errors when more than `budget` flats exist.
    pub fn all_flats(&self, budget: usize) -> Result<Vec<RankedSet>> {
        let start = self.closure(Subset::EMPTY);
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let mut rest = self.ground() - f;
            while let Some(e) = rest.min() {
                let g = self.closure(f.with(e));
                rest = rest - g;
                if seen.insert(g) {
                    if seen.len() > budget {
                        return Err(Error::Budget(format!("more than {budget} flats")));
                    }
                    queue.push_back(g);
                }
            }
        }
        let mut out: Vec<RankedSet> = seen
            .into_iter()
            .map(|f| RankedSet::new(f, self.rank(f)))
            .collect();
        out.sort_by(|a, b| a.set.size_lex_cmp(b.set));
        Ok(out)
    }

    /// Finest partition of the ground set into separators; loops and
    /// coloops are singletons. Exhaustive over subsets.
    pub fn direct_components(&self) -> Result<Vec<Subset>> {
        if self.n > ORACLE_LIMIT {
            return Err(Error::Budget(format!(
                "separator search needs n <= {ORACLE_LIMIT}"
            )));
        }
        let e = self.ground();
        let rm = self.rank_of_matroid();
        let separators: Vec<Subset> = (1..1u64 << self.n)
            .into_par_iter()
            .map(Subset::from_bits)
            .filter(|&s| self.rank(s) + self.rank(e - s) == rm)
            .collect();
        let mut parts = Vec::new();
        let mut left = e;
        while let Some(x) = left.min() {
            let comp = separators
                .iter()
                .filter(|s| s.contains(x))
                .fold(e, |acc, &s| acc & s);
            parts.push(comp);
            left = left - comp;
        }
        Ok(parts)
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.direct_components()?.len() <= 1)
    }

    /// Extracts the cyclic flats from a rank function by scanning every
    /// subset, then checks that the result reproduces the oracle.
    pub fn from_rank_oracle<F>(n: usize, oracle: F) -> Result<CyclicFlatMatroid>
    where
        F: Fn(Subset) -> usize + Sync,
    {
        if n > ORACLE_LIMIT {
            return Err(Error::Budget(format!(
                "rank oracle scan needs n <= {ORACLE_LIMIT}, got {n}"
            )));
        }
        let table: Vec<u8> = (0..1u64 << n)
            .into_par_iter()
            .map(|b| oracle(Subset::from_bits(b)) as u8)
            .collect();
        Self::from_rank_table(n, &table)
    }

    /// As [`from_rank_oracle`](Self::from_rank_oracle) with ranks indexed by
    /// subset bits.
    pub fn from_rank_table(n: usize, table: &[u8]) -> Result<CyclicFlatMatroid> {
        if n > ORACLE_LIMIT {
            return Err(Error::Budget(format!("rank table needs n <= {ORACLE_LIMIT}")));
        }
        let size = 1usize << n;
        if table.len() != size {
            return Err(Error::Internal("rank table has the wrong length".into()));
        }
        let flats: Vec<RankedSet> = (0..size)
            .into_par_iter()
            .filter_map(|b| {
                let r = table[b];
                for i in 0..n {
                    let bit = 1usize << i;
                    if b & bit == 0 {
                        if table[b | bit] == r {
                            return None;
                        }
                    } else if table[b ^ bit] != r {
                        return None;
                    }
                }
                Some(RankedSet::new(Subset::from_bits(b as u64), r as usize))
            })
            .collect();
        let m = CyclicFlatMatroid::new(n, flats)
            .map_err(|e| Error::NotAMatroid(format!("extracted flats fail validation: {e}")))?;
        let bad = (0..size)
            .into_par_iter()
            .find_first(|&b| m.rank(Subset::from_bits(b as u64)) != table[b] as usize);
        if let Some(b) = bad {
            return Err(Error::NotAMatroid(format!(
                "rank of {} disagrees with the cyclic-flat formula",
                Subset::from_bits(b as u64)
            )));
        }
        Ok(m)
    }

    /// Rank of every subset, indexed by bits.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        if self.n > ORACLE_LIMIT {
            return Err(Error::Budget(format!("rank table needs n <= {ORACLE_LIMIT}")));
        }
        Ok((0..1u64 << self.n)
            .into_par_iter()
            .map(|b| self.rank(Subset::from_bits(b)) as u8)
            .collect())
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            n: self.n,
            cyclic_flats: self.flats.clone(),
        }
    }

    pub fn from_json(json: MatroidJson) -> Result<Self> {
        Self::new(json.n, json.cyclic_flats)
    }

    /// Index of each flat set, for quick lookups.
    pub fn flat_index(&self) -> HashMap<Subset, usize> {
        self.flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.set, i))
            .collect()
    }
}

/// Interchange form: `{"n": .., "cyclic_flats": [{"set": [..], "rank": ..}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub cyclic_flats: Vec<RankedSet>,
}

impl Serialize for CyclicFlatMatroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclicFlatMatroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = MatroidJson::deserialize(d)?;
        CyclicFlatMatroid::from_json(json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    fn two_lines() -> CyclicFlatMatroid {
        CyclicFlatMatroid::from_pairs(6, [(vec![], 0), (vec![1, 2, 3], 2), (vec![4, 5, 6], 2), ((1..=6).collect(), 3)])
            .unwrap()
    }

    #[test]
    fn validation_reports() {
        let v = |n, pairs: &[(&[usize], usize)]| {
            let flats: Vec<RankedSet> = pairs.iter().map(|(x, r)| RankedSet::new(s(x), *r)).collect();
            validate_z_axioms(n, &flats).unwrap()
        };
        assert!(v(6, &[(&[], 0), (&[1, 2, 3], 2), (&[4, 5, 6], 2), (&[1, 2, 3, 4, 5, 6], 3)]).is_valid());
        assert_eq!(
            v(1, &[(&[], 0), (&[1], 1)]),
            ValidationReport::Violation { axiom: Axiom::Z2, first: s(&[]), second: s(&[1]) }
        );
        assert_eq!(
            v(4, &[(&[], 0), (&[1, 2], 1), (&[3, 4], 1), (&[1, 2, 3, 4], 3)]),
            ValidationReport::Violation { axiom: Axiom::Z2, first: s(&[1, 2]), second: s(&[1, 2, 3, 4]) }
        );
        assert_eq!(
            v(3, &[(&[], 0), (&[1, 2], 1), (&[2, 3], 1)]),
            ValidationReport::Violation { axiom: Axiom::Z0, first: s(&[1, 2]), second: s(&[2, 3]) }
        );
        let dup = [RankedSet::new(s(&[]), 0), RankedSet::new(s(&[]), 0)];
        assert_eq!(validate_z_axioms(2, &dup), Err(Error::DuplicateFlat(Subset::EMPTY)));
        assert_eq!(validate_z_axioms(65, &[]), Err(Error::GroundSetTooLarge(65)));
    }

    #[test]
    fn rank_and_closure_on_two_lines() {
        let m = two_lines();
        assert_eq!(m.rank(s(&[4, 5])), 2);
        assert_eq!(m.closure(s(&[4, 5])), s(&[4, 5, 6]));
        assert_eq!(m.closure(m.ground()), m.ground());
        assert_eq!(m.rank(Subset::EMPTY), 0);
        assert!(!m.is_modular_pair(s(&[1, 2, 3]), s(&[4, 5, 6])));
        assert_eq!(m.direct_components().unwrap(), vec![m.ground()]);
        let d = m.dual();
        let mut sizes: Vec<usize> = d.flats().iter().map(|f| f.set.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 3, 3, 6]);
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn lattice_of_two_lines_is_a_diamond() {
        let z = two_lines().zlattice();
        assert_eq!(z.len(), 4);
        assert_eq!(z.meet(1, 2), 0);
        assert_eq!(z.join(1, 2), 3);
    }

    #[test]
    fn free_and_uniform() {
        let f = CyclicFlatMatroid::free(2);
        assert_eq!(f.direct_components().unwrap(), vec![s(&[1]), s(&[2])]);
        let u = CyclicFlatMatroid::from_rank_oracle(3, |x| x.len().min(2)).unwrap();
        assert_eq!(u, CyclicFlatMatroid::uniform(2, 3).unwrap());
        let u12 = CyclicFlatMatroid::uniform(1, 2).unwrap();
        assert_eq!(u12.dual(), u12);
    }

    #[test]
    fn non_matroid_oracle_is_rejected() {
        // Rank jumps by two on a single element.
        let bad = CyclicFlatMatroid::from_rank_oracle(2, |x| if x.contains(1) { 2 } else { 0 });
        assert!(matches!(bad, Err(Error::NotAMatroid(_))));
    }

    #[test]
    fn json_round_trip() {
        let m = two_lines();
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.starts_with("{\"n\":6,\"cyclic_flats\":[{\"set\":[],\"rank\":0}"));
        assert_eq!(serde_json::from_str::<CyclicFlatMatroid>(&text).unwrap(), m);
    }
}
