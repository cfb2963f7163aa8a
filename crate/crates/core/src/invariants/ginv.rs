use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::CyclicFlatMatroid;
use crate::subset::Subset;

/// Ground-set limit for flag counting.
pub const FLAG_LIMIT: usize = 18;
/// Ground-set limit for the permutation scan.
pub const PERMUTATION_LIMIT: usize = 9;
const FLAT_BUDGET: usize = 1 << 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GMethod {
    /// Flags of flats `cl(∅) = F_0 ⊊ F_1 ⊊ ... ⊊ F_r = E` with `r(F_i) = i`,
    /// keyed by `(|F_0|, |F_1 - F_0|, ..., |F_r - F_{r-1}|)`.
    FlagCount,
    /// Permutations of `E` keyed by their 0/1 rank-increment vector.
    PermutationScan,
}

/// Both forms of the 𝒢-invariant share this type; the method tells which
/// keys are used.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GInvariant {
    pub method: GMethod,
    pub counts: BTreeMap<Vec<usize>, BigUint>,
}

impl GInvariant {
    pub fn to_json(&self) -> GInvariantJson {
        GInvariantJson {
            flags: self
                .counts
                .iter()
                .map(|(k, c)| FlagEntry {
                    composition: k.clone(),
                    count: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GInvariantJson {
    pub flags: Vec<FlagEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub composition: Vec<usize>,
    pub count: String,
}

pub fn g_invariant(m: &CyclicFlatMatroid, method: GMethod) -> Result<GInvariant> {
    let counts = match method {
        GMethod::FlagCount => flag_counts(m)?,
        GMethod::PermutationScan => permutation_scan(m)?,
    };
    Ok(GInvariant { method, counts })
}

fn flag_counts(m: &CyclicFlatMatroid) -> Result<BTreeMap<Vec<usize>, BigUint>> {
    if m.n() > FLAG_LIMIT {
        return Err(Error::Budget(format!("flag counting needs n <= {FLAG_LIMIT}")));
    }
    let flats = m.all_flats(FLAT_BUDGET)?;
    let index: HashMap<Subset, usize> = flats.iter().enumerate().map(|(i, f)| (f.set, i)).collect();
    let mut covers = vec![Vec::new(); flats.len()];
    for (i, f) in flats.iter().enumerate() {
        let mut rest = m.ground() - f.set;
        while let Some(e) = rest.min() {
            let g = m.closure(f.set.with(e));
            rest = rest - g;
            covers[i].push(index[&g]);
        }
    }
    // Suffix tables, filled from the top down. Flats are sorted by size, so
    // every cover of flat `i` has a larger index.
    let mut suffix: Vec<BTreeMap<Vec<usize>, BigUint>> = vec![BTreeMap::new(); flats.len()];
    for i in (0..flats.len()).rev() {
        if covers[i].is_empty() {
            suffix[i].insert(Vec::new(), BigUint::one());
            continue;
        }
        let mut table = BTreeMap::new();
        for &g in &covers[i] {
            let step = flats[g].set.len() - flats[i].set.len();
            for (tail, c) in &suffix[g] {
                let mut key = Vec::with_capacity(tail.len() + 1);
                key.push(step);
                key.extend_from_slice(tail);
                *table.entry(key).or_insert_with(BigUint::default) += c;
            }
        }
        suffix[i] = table;
    }
    let d0 = flats[0].set.len();
    Ok(std::mem::take(&mut suffix[0])
        .into_iter()
        .map(|(tail, c)| {
            let mut key = vec![d0];
            key.extend(tail);
            (key, c)
        })
        .collect())
}

fn permutation_scan(m: &CyclicFlatMatroid) -> Result<BTreeMap<Vec<usize>, BigUint>> {
    let n = m.n();
    if n > PERMUTATION_LIMIT {
        return Err(Error::Budget(format!(
            "permutation scan needs n <= {PERMUTATION_LIMIT}"
        )));
    }
    let table = m.rank_table()?;
    let mut hist: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut vector = Vec::with_capacity(n);
    scan(n, &table, 0, &mut vector, &mut hist);
    Ok(hist.into_iter().map(|(k, c)| (k, BigUint::from(c))).collect())
}

fn scan(n: usize, table: &[u8], used: usize, vector: &mut Vec<usize>, hist: &mut BTreeMap<Vec<usize>, u64>) {
    if vector.len() == n {
        *hist.entry(vector.clone()).or_insert(0) += 1;
        return;
    }
    for e in 0..n {
        if used >> e & 1 == 1 {
            continue;
        }
        let next = used | 1 << e;
        vector.push((table[next] - table[used]) as usize);
        scan(n, table, next, vector, hist);
        vector.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u12_has_a_single_flag() {
        let g = g_invariant(&CyclicFlatMatroid::uniform(1, 2).unwrap(), GMethod::FlagCount).unwrap();
        assert_eq!(g.counts, BTreeMap::from([(vec![0, 2], BigUint::one())]));
    }

    #[test]
    fn u24_flags_and_permutations() {
        let u = CyclicFlatMatroid::uniform(2, 4).unwrap();
        let g = g_invariant(&u, GMethod::FlagCount).unwrap();
        assert_eq!(g.counts, BTreeMap::from([(vec![0, 1, 3], BigUint::from(4u32))]));
        let p = g_invariant(&u, GMethod::PermutationScan).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(vec![1, 1, 0, 0], BigUint::from(24u32))]));
    }
}
