//! Canonical labelling of small labelled posets by colour refinement and
//! individualisation. The canonical form is the least encoding over all
//! leaves of the search tree, so it is exact, not heuristic.

use std::collections::BTreeMap;

/// Result of canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `header | labels in canonical order | order bits`.
    pub encoding: Vec<u8>,
    /// `position[v]` is the canonical slot of node `v`.
    pub position: Vec<usize>,
}

/// Canonical form of the poset on `0..labels.len()` with node labels and
/// strict-or-equal relation `leq`. `tag` is stored in the header; callers use
/// it for the ground-set size.
pub fn canonical_form(
    tag: usize,
    labels: &[(u16, u16)],
    leq: impl Fn(usize, usize) -> bool,
) -> CanonicalForm {
    let k = labels.len();
    let mut above = vec![Vec::new(); k];
    let mut below = vec![Vec::new(); k];
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if leq(i, j) {
                rel[i][j] = true;
                if i != j {
                    above[i].push(j);
                    below[j].push(i);
                }
            }
        }
    }
    let poset = Poset {
        tag,
        labels,
        above,
        below,
        rel,
    };
    let colours = poset.refine(rank_values(labels));
    let mut best: Option<CanonicalForm> = None;
    poset.search(colours, &mut best);
    best.expect("search visits at least one leaf")
}

struct Poset<'a> {
    tag: usize,
    labels: &'a [(u16, u16)],
    above: Vec<Vec<usize>>,
    below: Vec<Vec<usize>>,
    rel: Vec<Vec<bool>>,
}

impl Poset<'_> {
    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut classes = distinct(&colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..colours.len())
                .map(|v| {
                    let mut up: Vec<u32> = self.above[v].iter().map(|&w| colours[w]).collect();
                    let mut down: Vec<u32> = self.below[v].iter().map(|&w| colours[w]).collect();
                    up.sort_unstable();
                    down.sort_unstable();
                    (colours[v], up, down)
                })
                .collect();
            colours = rank_values(&sigs);
            let next = distinct(&colours);
            if next == classes {
                return colours;
            }
            classes = next;
        }
    }

    fn search(&self, colours: Vec<u32>, best: &mut Option<CanonicalForm>) {
        let k = colours.len();
        let mut counts = BTreeMap::new();
        for &c in &colours {
            *counts.entry(c).or_insert(0usize) += 1;
        }
        let Some((&cell, _)) = counts.iter().find(|(_, &size)| size > 1) else {
            let position: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
            let encoding = self.encode(&position);
            if best.as_ref().map_or(true, |b| encoding < b.encoding) {
                *best = Some(CanonicalForm { encoding, position });
            }
            return;
        };
        for v in (0..k).filter(|&v| colours[v] == cell) {
            let split: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(w != v))
                .collect();
            self.search(self.refine(rank_values(&split)), best);
        }
    }

    fn encode(&self, position: &[usize]) -> Vec<u8> {
        let k = position.len();
        let mut order = vec![0; k];
        for (v, &p) in position.iter().enumerate() {
            order[p] = v;
        }
        let mut out = Vec::with_capacity(4 + 4 * k + (k * k).div_ceil(8));
        out.extend_from_slice(&(self.tag as u16).to_be_bytes());
        out.extend_from_slice(&(k as u16).to_be_bytes());
        for &v in &order {
            out.extend_from_slice(&self.labels[v].0.to_be_bytes());
            out.extend_from_slice(&self.labels[v].1.to_be_bytes());
        }
        out.extend(pack_bits(
            order
                .iter()
                .flat_map(|&a| order.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.rel[a][b]),
        ));
        out
    }
}

fn pack_bits(bits: impl Iterator<Item = bool>) -> Vec<u8> {
    let mut out = Vec::new();
    for (i, bit) in bits.enumerate() {
        if i % 8 == 0 {
            out.push(0);
        }
        if bit {
            *out.last_mut().unwrap() |= 0x80 >> (i % 8);
        }
    }
    out
}

/// Replace each value by its rank among the distinct values.
fn rank_values<T: Ord + Clone>(values: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u32)
        .collect()
}

fn distinct(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Boolean lattice on `m` atoms, as subsets ordered by inclusion.
    fn boolean(m: usize) -> (Vec<(u16, u16)>, Vec<u32>) {
        let sets: Vec<u32> = (0..1u32 << m).collect();
        let labels = sets.iter().map(|s| (s.count_ones() as u16, 0)).collect();
        (labels, sets)
    }

    #[test]
    fn invariant_under_shuffling() {
        let (labels, sets) = boolean(3);
        let base = canonical_form(3, &labels, |a, b| sets[a] & !sets[b] == 0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..sets.len()).collect();
            perm.shuffle(&mut rng);
            let l2: Vec<_> = perm.iter().map(|&i| labels[i]).collect();
            let s2: Vec<_> = perm.iter().map(|&i| sets[i]).collect();
            let other = canonical_form(3, &l2, |a, b| s2[a] & !s2[b] == 0);
            assert_eq!(other.encoding, base.encoding);
        }
    }

    #[test]
    fn distinguishes_labels() {
        let chain = |a: usize, b: usize| a <= b;
        let x = canonical_form(2, &[(0, 0), (2, 1)], chain);
        let y = canonical_form(2, &[(0, 0), (2, 2)], chain);
        assert_ne!(x.encoding, y.encoding);
    }
}
