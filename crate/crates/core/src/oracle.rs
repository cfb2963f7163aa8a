//! Brute-force reference computations. Each one ignores the structure the
//! main code exploits, so agreement between the two is evidence for both.

use std::collections::HashMap;

use crate::enumeration::{corner_positions, word_to_diagram, Letter, Word};
use crate::invariants::{configuration, Configuration};
use crate::lpm::Diagram;
use crate::matroid::CyclicFlatMatroid;
use crate::subset::Subset;

/// Partitions of `[m]` into `r` blocks that can be ordered so that every
/// union of an initial run of blocks is an interval.
pub fn order_consecutive_brute(m: usize, r: usize) -> u128 {
    let mut count = 0;
    let mut blocks: Vec<Subset> = Vec::new();
    partitions(1, m, &mut blocks, &mut |bs| {
        if bs.len() == r && orderable(bs) {
            count += 1;
        }
    });
    count
}

fn partitions(e: usize, m: usize, blocks: &mut Vec<Subset>, visit: &mut dyn FnMut(&[Subset])) {
    if e > m {
        visit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        blocks[i] = blocks[i].with(e);
        partitions(e + 1, m, blocks, visit);
        blocks[i] = blocks[i].without(e);
    }
    blocks.push(Subset::singleton(e));
    partitions(e + 1, m, blocks, visit);
    blocks.pop();
}

fn is_interval(s: Subset) -> bool {
    match (s.min(), s.max()) {
        (Some(a), Some(b)) => s.len() == b - a + 1,
        _ => true,
    }
}

/// Search over sets of used blocks whose union is an interval.
fn orderable(blocks: &[Subset]) -> bool {
    let k = blocks.len();
    let mut reach = vec![false; 1 << k];
    reach[0] = true;
    for used in 0..1usize << k {
        if !reach[used] {
            continue;
        }
        let union = (0..k)
            .filter(|i| used >> i & 1 == 1)
            .fold(Subset::EMPTY, |acc, i| acc | blocks[i]);
        for i in 0..k {
            if used >> i & 1 == 0 && is_interval(union | blocks[i]) {
                reach[used | 1 << i] = true;
            }
        }
    }
    reach[(1 << k) - 1]
}

/// Paths from `(0,0)` to `(i,j)` with unit east, north and diagonal steps,
/// counted one by one.
pub fn delannoy_brute(i: usize, j: usize) -> u128 {
    if i == 0 || j == 0 {
        return 1;
    }
    delannoy_brute(i - 1, j) + delannoy_brute(i, j - 1) + delannoy_brute(i - 1, j - 1)
}

/// For every word of length `m - 1` meeting the uniqueness conditions
/// (`S` exactly at lower corners, `T` exactly at upper corners, no `RC`),
/// the diagram it builds. Non-mixed diagrams of size `m` should each
/// receive exactly one word.
pub fn canonical_words_brute(m: usize) -> HashMap<Diagram, Vec<Word>> {
    let mut out: HashMap<Diagram, Vec<Word>> = HashMap::new();
    for w in Word::all(m - 1) {
        let l = w.letters();
        if l.windows(2).any(|p| p == [Letter::R, Letter::C]) {
            continue;
        }
        let d = word_to_diagram(&w);
        let (upper, lower) = corner_positions(&d).expect("grammar diagrams are connected");
        let at = |x: Letter| -> Vec<usize> {
            (0..l.len()).filter(|&i| l[i] == x).map(|i| i + 1).collect()
        };
        let mut upper = upper;
        let mut lower = lower;
        upper.sort();
        lower.sort();
        if at(Letter::S) == lower && at(Letter::T) == upper {
            out.entry(d).or_default().push(w);
        }
    }
    out
}

/// Every matroid on `[n]` as a family of bases, `n <= 6`.
pub fn all_labelled_matroids(n: usize) -> Vec<CyclicFlatMatroid> {
    assert!(n <= 6, "brute basis search is limited to n <= 6");
    let mut out = Vec::new();
    for r in 0..=n {
        let sets: Vec<Subset> = (0..1u64 << n)
            .map(Subset::from_bits)
            .filter(|s| s.len() == r)
            .collect();
        for mask in 1u64..1 << sets.len() {
            let bases: Vec<Subset> = (0..sets.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| sets[i])
                .collect();
            if exchange(&bases) {
                let m = CyclicFlatMatroid::from_rank_oracle(n, |x| {
                    bases.iter().map(|&b| (x & b).len()).max().unwrap_or(0)
                })
                .expect("basis families satisfying exchange are matroids");
                out.push(m);
            }
        }
    }
    out
}

fn exchange(bases: &[Subset]) -> bool {
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            (b1 - b2).iter().all(|x| {
                (b2 - b1)
                    .iter()
                    .any(|y| bases.contains(&b1.without(x).with(y)))
            })
        })
    })
}

/// One matroid from each isomorphism class on `[n]`, `n <= 6`.
pub fn nonisomorphic_matroids(n: usize) -> Vec<CyclicFlatMatroid> {
    let mut classes: HashMap<Configuration, Vec<CyclicFlatMatroid>> = HashMap::new();
    let mut out = Vec::new();
    for m in all_labelled_matroids(n) {
        let reps = classes.entry(configuration(&m)).or_default();
        if !reps.iter().any(|r| isomorphic_brute(r, &m)) {
            reps.push(m.clone());
            out.push(m);
        }
    }
    out
}

/// Tries every permutation of the ground set; `n <= 9`.
pub fn isomorphic_brute(a: &CyclicFlatMatroid, b: &CyclicFlatMatroid) -> bool {
    if a.n() != b.n() || a.flats().len() != b.flats().len() {
        return false;
    }
    let n = a.n();
    assert!(n <= 9, "permutation scan is limited to n <= 9");
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        if a.relabel(&perm) == *b {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matroid_counts() {
        let counts: Vec<_> = (0..=4).map(|n| nonisomorphic_matroids(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 17]);
    }

    #[test]
    fn order_consecutive_small() {
        assert_eq!(order_consecutive_brute(3, 2), 3);
        assert_eq!(order_consecutive_brute(4, 2), 6);
        assert_eq!(delannoy_brute(2, 2), 13);
    }
}
