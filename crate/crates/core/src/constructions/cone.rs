//! Free `m`-cones and parallel blow-ups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{CyclicFlatMatroid, RankedSet, ORACLE_LIMIT};
use crate::subset::{Subset, MAX_GROUND};

use super::extension::{add_coloop, principal_extension};

/// Flats visited when listing all flats of a base matroid.
const FLAT_BUDGET: usize = 1 << 18;

/// A free `m`-cone with its element roles. The ground set is the base
/// `E(M) = [n]`, then the tip `n + 1`, then the `m` cone points of each base
/// element in ascending order of base element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConedMatroid {
    pub matroid: CyclicFlatMatroid,
    pub tip: usize,
    pub base: Vec<usize>,
    /// `points[e - 1]` lists the cone points on the line through the tip and `e`.
    pub points: Vec<Vec<usize>>,
}

impl ConedMatroid {
    /// `Q \ a`.
    pub fn tipless(&self) -> Result<CyclicFlatMatroid> {
        self.matroid.delete(Subset::singleton(self.tip))
    }

    /// `Q \ E(M)`.
    pub fn baseless(&self) -> Result<CyclicFlatMatroid> {
        self.matroid.delete(self.base_set())
    }

    /// `Q \ (E(M) ∪ a)`.
    pub fn tipless_baseless(&self) -> Result<CyclicFlatMatroid> {
        self.matroid.delete(self.base_set().with(self.tip))
    }

    fn base_set(&self) -> Subset {
        self.base.iter().copied().collect()
    }
}

fn cone_layout(n: usize, m: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    let total = n + 1 + n * m;
    if total > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(total));
    }
    let points = (1..=n)
        .map(|e| (0..m).map(|j| n + 2 + (e - 1) * m + j).collect())
        .collect();
    Ok((total, points))
}

/// Adds a coloop tip `a` and then `m` points freely on each line `cl(a, e)`.
/// Built from the cyclic flats: those of `M`, and for each nonempty flat `X`
/// of `M` the set `a ∪ X ∪ (cone points over X)` with rank `r(X) + 1`.
pub fn free_m_cone(base: &CyclicFlatMatroid, m: usize) -> Result<ConedMatroid> {
    if m == 0 {
        return Err(Error::OutOfBounds("a free m-cone needs m >= 1".into()));
    }
    if !base.loops().is_empty() {
        return Err(Error::HasLoops);
    }
    let n = base.n();
    let (total, points) = cone_layout(n, m)?;
    let tip = n + 1;
    let over = |x: Subset| -> Subset {
        x.iter()
            .flat_map(|e| points[e - 1].iter().copied())
            .collect::<Subset>()
            .with(tip)
            | x
    };
    let mut flats = base.flats().to_vec();
    for f in base.all_flats(FLAT_BUDGET)? {
        if !f.set.is_empty() {
            flats.push(RankedSet::new(over(f.set), f.rank + 1));
        }
    }
    Ok(ConedMatroid {
        matroid: CyclicFlatMatroid::new(total, flats)?,
        tip,
        base: (1..=n).collect(),
        points,
    })
}

/// The same cone built independently by a coloop and iterated principal
/// extensions; limited by the rank-oracle budget.
pub fn free_m_cone_by_extensions(base: &CyclicFlatMatroid, m: usize) -> Result<ConedMatroid> {
    if m == 0 {
        return Err(Error::OutOfBounds("a free m-cone needs m >= 1".into()));
    }
    if !base.loops().is_empty() {
        return Err(Error::HasLoops);
    }
    let n = base.n();
    let (total, points) = cone_layout(n, m)?;
    if total > ORACLE_LIMIT {
        return Err(Error::Budget(format!("cone has {total} elements; extensions need <= {ORACLE_LIMIT}")));
    }
    let tip = n + 1;
    let mut q = add_coloop(base)?;
    for e in 1..=n {
        for _ in 0..m {
            q = principal_extension(&q, Subset::from_elems([tip, e]))?;
        }
    }
    Ok(ConedMatroid {
        matroid: q,
        tip,
        base: (1..=n).collect(),
        points,
    })
}

/// `M^k`: `k` new elements parallel to each element, numbered `n + 1, ...`
/// grouped by base element. Every flat `F` of `M` yields the cyclic flat
/// `F` plus its copies.
pub fn parallel_blowup(m: &CyclicFlatMatroid, k: usize) -> Result<CyclicFlatMatroid> {
    let n = m.n();
    let total = n * (k + 1);
    if total > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(total));
    }
    if k == 0 {
        return Ok(m.clone());
    }
    let blow = |x: Subset| -> Subset {
        x.iter()
            .flat_map(|e| (0..k).map(move |j| n + 1 + (e - 1) * k + j))
            .collect::<Subset>()
            | x
    };
    let flats = m
        .all_flats(FLAT_BUDGET)?
        .into_iter()
        .map(|f| RankedSet::new(blow(f.set), f.rank))
        .collect();
    CyclicFlatMatroid::new(total, flats)
}

/// Rank-oracle version of [`parallel_blowup`], for cross-checking.
pub fn parallel_blowup_by_oracle(m: &CyclicFlatMatroid, k: usize) -> Result<CyclicFlatMatroid> {
    let n = m.n();
    let total = n * (k + 1);
    if total > ORACLE_LIMIT {
        return Err(Error::Budget(format!("blow-up has {total} elements; oracle needs <= {ORACLE_LIMIT}")));
    }
    CyclicFlatMatroid::from_rank_oracle(total, |a| {
        let proj: Subset = a
            .iter()
            .map(|e| if e <= n { e } else { (e - n - 1) / k + 1 })
            .collect();
        m.rank(proj)
    })
}
