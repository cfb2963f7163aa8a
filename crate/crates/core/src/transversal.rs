//! Transversal matroids: set-system presentations, matching rank and the
//! Mason–Ingleton inequalities.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::CyclicFlatMatroid;
use crate::subset::{Subset, MAX_GROUND};

/// An indexed family `(A_1, ..., A_r)` of subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Subset>,
    /// For each element, the bitmask of set indices containing it.
    adj: Vec<u64>,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Subset>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        if sets.len() > 64 {
            return Err(Error::OutOfBounds(format!("{} sets; at most 64 supported", sets.len())));
        }
        if let Some(&set) = sets.iter().find(|s| !s.within(n)) {
            return Err(Error::OutOfRange { set, n });
        }
        let adj = (1..=n)
            .map(|e| {
                sets.iter()
                    .enumerate()
                    .filter(|(_, a)| a.contains(e))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(SetSystem { n, sets, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// Indices `i` (1-based) with `X ∩ A_i` nonempty.
    pub fn support(&self, x: Subset) -> Subset {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_disjoint(x))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Size of a largest matching of `X` into the index set.
    pub fn rank(&self, x: Subset) -> usize {
        let mut owner = vec![0usize; self.sets.len()];
        let mut size = 0;
        for e in x.iter() {
            let mut seen = 0u64;
            if augment(e, &self.adj, &mut owner, &mut seen) {
                size += 1;
            }
        }
        size
    }

    pub fn to_json(&self) -> SetSystemJson {
        SetSystemJson {
            n: self.n,
            sets: self.sets.clone(),
        }
    }

    pub fn from_json(json: SetSystemJson) -> Result<Self> {
        SetSystem::new(json.n, json.sets)
    }
}

/// Kuhn's augmenting path from element `e`; `owner[i]` is the element
/// matched to set `i`, or 0.
fn augment(e: usize, adj: &[u64], owner: &mut [usize], seen: &mut u64) -> bool {
    let mut cand = adj[e - 1] & !*seen;
    while cand != 0 {
        let i = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if *seen >> i & 1 == 1 {
            continue;
        }
        *seen |= 1 << i;
        if owner[i] == 0 || augment(owner[i], adj, owner, seen) {
            owner[i] = e;
            return true;
        }
    }
    false
}

/// Interchange form: `{"n": .., "sets": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystemJson {
    pub n: usize,
    pub sets: Vec<Subset>,
}

pub fn transversal_rank(a: &SetSystem, x: Subset) -> usize {
    a.rank(x)
}

pub fn support(a: &SetSystem, x: Subset) -> Subset {
    a.support(x)
}

/// The transversal matroid of `a`. Each cyclic flat is checked to have rank
/// equal to the size of its support, as it must for any presentation.
pub fn matroid_of(a: &SetSystem) -> Result<CyclicFlatMatroid> {
    let m = CyclicFlatMatroid::from_rank_oracle(a.n, |x| a.rank(x))?;
    for f in m.flats() {
        if f.rank != a.support(f.set).len() {
            return Err(Error::Internal(format!(
                "cyclic flat {} has rank {} but meets {} sets",
                f.set,
                f.rank,
                a.support(f.set).len()
            )));
        }
    }
    Ok(m)
}

/// Result of the Mason–Ingleton test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasonIngleton {
    pub transversal: bool,
    /// The first violating antichain found, in (size, lex) order of flats.
    pub violation: Option<Vec<Subset>>,
}

/// Antichains visited before giving up.
pub const ANTICHAIN_BUDGET: usize = 5_000_000;

/// Decides transversality by checking the Mason–Ingleton inequality on every
/// antichain of at least three cyclic flats.
pub fn mason_ingleton(m: &CyclicFlatMatroid) -> Result<MasonIngleton> {
    let flats = m.flat_sets();
    let mut search = Antichains {
        m,
        flats: &flats,
        ranks: HashMap::new(),
        visited: 0,
    };
    let mut chosen = Vec::new();
    let mut terms = Vec::new();
    let violation = search.dfs(0, &mut chosen, &mut terms)?;
    Ok(MasonIngleton {
        transversal: violation.is_none(),
        violation: violation.map(|ix| ix.into_iter().map(|i| flats[i]).collect()),
    })
}

struct Antichains<'a> {
    m: &'a CyclicFlatMatroid,
    flats: &'a [Subset],
    ranks: HashMap<Subset, usize>,
    visited: usize,
}

impl Antichains<'_> {
    fn rank(&mut self, x: Subset) -> usize {
        let m = self.m;
        *self.ranks.entry(x).or_insert_with(|| m.rank(x))
    }

    /// `terms` holds `(∪X, sign)` for every nonempty subfamily `X` of the
    /// current antichain, so the right-hand side is their signed rank sum.
    fn dfs(
        &mut self,
        start: usize,
        chosen: &mut Vec<usize>,
        terms: &mut Vec<(Subset, i64)>,
    ) -> Result<Option<Vec<usize>>> {
        if chosen.len() >= 3 {
            self.visited += 1;
            if self.visited > ANTICHAIN_BUDGET {
                return Err(Error::Budget(format!(
                    "more than {ANTICHAIN_BUDGET} antichains of cyclic flats"
                )));
            }
            let meet = chosen
                .iter()
                .fold(self.m.ground(), |acc, &i| acc & self.flats[i]);
            let lhs = self.rank(meet) as i64;
            let mut rhs = 0i64;
            for k in 0..terms.len() {
                let (u, s) = terms[k];
                rhs += s * self.rank(u) as i64;
            }
            if lhs > rhs {
                return Ok(Some(chosen.clone()));
            }
        }
        for j in start..self.flats.len() {
            let g = self.flats[j];
            if chosen
                .iter()
                .any(|&i| self.flats[i].is_subset(g) || g.is_subset(self.flats[i]))
            {
                continue;
            }
            let before = terms.len();
            let extra: Vec<(Subset, i64)> = terms.iter().map(|&(u, s)| (u | g, -s)).collect();
            terms.push((g, 1));
            terms.extend(extra);
            chosen.push(j);
            if let Some(found) = self.dfs(j + 1, chosen, terms)? {
                return Ok(Some(found));
            }
            chosen.pop();
            terms.truncate(before);
        }
        Ok(None)
    }
}
