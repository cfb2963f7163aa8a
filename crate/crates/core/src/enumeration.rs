//! Counting connected diagrams: generation, the `C/R/S/T` word grammar for
//! non-mixed diagrams, canonical words, thick pieces, closed-form counts and
//! the census that compares them.
//!
//! Diagrams are handled through their rows `(L_i, R_i)`; the squares of row
//! `i` are the unit squares with left edge `x` in `[L_i, R_i)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lpm::{corner_flats, mixed_pairs, CornerKind, Diagram, LatticePath, Step};

/// Largest size accepted by [`diagrams_of_size`].
pub const MAX_DIAGRAM_SIZE: usize = 12;

/// All diagrams whose paths have `len` steps, sorted by `(upper, lower)`.
/// With `connected` the paths may meet only at their endpoints.
pub fn diagrams_with_length(len: usize, connected: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut q = Vec::with_capacity(len);
    let mut p = Vec::with_capacity(len);
    grow(len, connected, 0, 0, &mut q, &mut p, &mut out);
    out.sort();
    out
}

fn grow(
    len: usize,
    connected: bool,
    qn: usize,
    pn: usize,
    q: &mut Vec<Step>,
    p: &mut Vec<Step>,
    out: &mut Vec<Diagram>,
) {
    let k = q.len();
    if k == len {
        if qn == pn {
            let d = Diagram::new(
                LatticePath::new(q.clone()).expect("nonempty"),
                LatticePath::new(p.clone()).expect("nonempty"),
            )
            .expect("generated paths are valid");
            out.push(d);
        }
        return;
    }
    for a in [Step::N, Step::E] {
        for b in [Step::N, Step::E] {
            let q2 = qn + usize::from(a == Step::N);
            let p2 = pn + usize::from(b == Step::N);
            let interior = k + 1 < len;
            if p2 > q2 || (connected && interior && p2 == q2) || q2 - p2 > len - k - 1 {
                continue;
            }
            q.push(a);
            p.push(b);
            grow(len, connected, q2, p2, q, p, out);
            q.pop();
            p.pop();
        }
    }
}

/// The connected diagrams of size `m` (paths of length `m + 1`); there are
/// `Catalan(m)` of them.
pub fn diagrams_of_size(m: usize) -> Result<Vec<Diagram>> {
    if m == 0 || m > MAX_DIAGRAM_SIZE {
        return Err(Error::OutOfBounds(format!(
            "diagram size must be in 1..={MAX_DIAGRAM_SIZE}, got {m}"
        )));
    }
    Ok(diagrams_with_length(m + 1, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Duplicate the rightmost column.
    C,
    /// Duplicate the topmost row.
    R,
    /// Add a square right of the topmost row.
    S,
    /// Add a square above the rightmost column.
    T,
}

pub const LETTERS: [Letter; 4] = [Letter::C, Letter::R, Letter::S, Letter::T];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every word of length `len`, in lexicographic order.
    pub fn all(len: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    LETTERS.iter().map(move |&l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'C' => Ok(Letter::C),
                'R' => Ok(Letter::R),
                'S' => Ok(Letter::S),
                'T' => Ok(Letter::T),
                other => Err(Error::Malformed(format!("{other:?} is not one of C, R, S, T"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

fn apply(rows: &mut Vec<(usize, usize)>, letter: Letter) {
    let w = rows.last().expect("at least one row").1;
    match letter {
        Letter::R => rows.push(*rows.last().unwrap()),
        Letter::C => rows.iter_mut().filter(|r| r.1 == w).for_each(|r| r.1 += 1),
        Letter::S => rows.last_mut().unwrap().1 += 1,
        Letter::T => rows.push((w - 1, w)),
    }
}

/// The diagram built from a single square by the letters of `w`.
pub fn word_to_diagram(w: &Word) -> Diagram {
    let mut rows = vec![(0, 1)];
    for &l in w.letters() {
        apply(&mut rows, l);
    }
    Diagram::from_rows(&rows).expect("the grammar only builds valid diagrams")
}

/// Positions `a1 + a2` of the corners, split into upper-path (`T`) and
/// lower-path (`S`) corners.
pub fn corner_positions(d: &Diagram) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for c in corner_flats(d)? {
        let pos = c.corner.0 + c.corner.1;
        match c.kind {
            CornerKind::Initial => upper.push(pos),
            CornerKind::Final => lower.push(pos),
        }
    }
    Ok((upper, lower))
}

fn require_non_mixed(d: &Diagram) -> Result<()> {
    if mixed_pairs(d)?.is_empty() {
        Ok(())
    } else {
        Err(Error::Mixed)
    }
}

/// The unique word with `S` and `T` exactly at the lower and upper corners
/// and no `RC`. Letters are peeled off the end: a corner at the last
/// position forces `S` or `T`; otherwise `R` is preferred to `C`.
pub fn canonical_word(d: &Diagram) -> Result<Word> {
    require_non_mixed(d)?;
    let mut rows = d.rows();
    let mut rev = Vec::with_capacity(d.size());
    while rows.len() + rows.last().unwrap().1 > 2 {
        let r = rows.len();
        let w = rows[r - 1].1;
        let below = (r >= 2).then(|| rows[r - 2]);
        let letter = if below.is_some_and(|b| b.1 + 1 == w) {
            rows[r - 1].1 -= 1;
            Letter::S
        } else if below.is_some_and(|b| rows[r - 1].0 + 1 == w && b.0 < rows[r - 1].0) {
            rows.pop();
            Letter::T
        } else if below == Some(rows[r - 1]) {
            rows.pop();
            Letter::R
        } else if w >= 2
            && rows.iter().all(|row| row.1 != w - 1)
            && rows.iter().filter(|row| row.1 == w).all(|row| row.0 + 2 <= w)
        {
            rows.iter_mut().filter(|row| row.1 == w).for_each(|row| row.1 -= 1);
            Letter::C
        } else {
            return Err(Error::Internal(format!("no letter peels the diagram {d}")));
        };
        rev.push(letter);
    }
    rev.reverse();
    Ok(Word(rev))
}

/// Non-mixed, size at least three, and every segment from the lower path to
/// the upper path through the interior has length at least two: this covers
/// rows and columns and also the grid lines between consecutive rows and
/// between consecutive columns.
pub fn is_thick(d: &Diagram) -> Result<bool> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    if d.size() < 3 || !mixed_pairs(d)?.is_empty() {
        return Ok(false);
    }
    let rows = d.rows();
    let wide = rows.iter().all(|&(l, r)| r - l >= 2);
    let tall = (0..d.width()).all(|x| rows.iter().filter(|&&(l, r)| l <= x && x < r).count() >= 2);
    let rows_overlap = rows.windows(2).all(|w| w[0].1 - w[1].0 >= 2);
    let cols_overlap = (1..d.width()).all(|x| column_overlap(&rows, x) >= 2);
    Ok(wide && tall && rows_overlap && cols_overlap)
}

/// Length of the segment of the line `x = c` inside the diagram: the number
/// of rows holding both squares `c - 1` and `c`.
fn column_overlap(rows: &[(usize, usize)], c: usize) -> usize {
    rows.iter().filter(|&&(l, r)| l < c && c < r).count()
}

/// How a piece attaches to the one before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Glue {
    /// Along a north step: the piece sits to the right of the previous one.
    North,
    /// Along an east step: the piece sits above the previous one.
    East,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub diagram: Diagram,
    /// `None` for the first piece.
    pub glue: Option<Glue>,
}

/// Cuts between consecutive rows, or columns, that share a single square;
/// the pieces are thick diagrams and single squares, in order.
pub fn thick_decompose(d: &Diagram) -> Result<Vec<Piece>> {
    require_non_mixed(d)?;
    let rows = d.rows();
    let width = d.width();
    // square (x, i) for row i (0-based)
    let mut id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut squares = Vec::new();
    for (i, &(l, r)) in rows.iter().enumerate() {
        for x in l..r {
            id.insert((x, i), squares.len());
            squares.push((x, i));
        }
    }
    let row_cut: Vec<bool> = rows.windows(2).map(|w| w[0].1 - w[1].0 == 1).collect();
    let col_cut: Vec<bool> = (1..width).map(|c| column_overlap(&rows, c) == 1).collect();
    let mut comp = vec![usize::MAX; squares.len()];
    let mut count = 0;
    for start in 0..squares.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = count;
        while let Some(s) = stack.pop() {
            let (x, i) = squares[s];
            let mut nbrs = Vec::new();
            if x + 1 < width && !col_cut[x] {
                nbrs.push((x + 1, i));
            }
            if x > 0 && !col_cut[x - 1] {
                nbrs.push((x - 1, i));
            }
            if i + 1 < rows.len() && !row_cut[i] {
                nbrs.push((x, i + 1));
            }
            if i > 0 && !row_cut[i - 1] {
                nbrs.push((x, i - 1));
            }
            for nb in nbrs {
                if let Some(&t) = id.get(&nb) {
                    if comp[t] == usize::MAX {
                        comp[t] = count;
                        stack.push(t);
                    }
                }
            }
        }
        count += 1;
    }
    let mut pieces: Vec<Vec<(usize, usize)>> = vec![Vec::new(); count];
    for (s, &c) in comp.iter().enumerate() {
        pieces[c].push(squares[s]);
    }
    let mut out = Vec::with_capacity(count);
    let mut prev: Option<(usize, usize)> = None;
    for piece in pieces {
        let x0 = piece.iter().map(|s| s.0).min().unwrap();
        let i0 = piece.iter().map(|s| s.1).min().unwrap();
        let i1 = piece.iter().map(|s| s.1).max().unwrap();
        let local: Vec<(usize, usize)> = (i0..=i1)
            .map(|i| {
                let xs = piece.iter().filter(|s| s.1 == i).map(|s| s.0);
                let lo = xs.clone().min().unwrap();
                let hi = xs.max().unwrap();
                (lo - x0, hi + 1 - x0)
            })
            .collect();
        let glue = prev.map(|(_, pi1)| if pi1 == i0 { Glue::North } else { Glue::East });
        prev = Some((i0, i1));
        out.push(Piece {
            diagram: Diagram::from_rows(&local)?,
            glue,
        });
    }
    Ok(out)
}

/// Reassembles pieces produced by [`thick_decompose`].
pub fn glue_pieces(pieces: &[Piece]) -> Result<Diagram> {
    let Some(first) = pieces.first() else {
        return Err(Error::InvalidDiagram("no pieces".into()));
    };
    let mut rows = first.diagram.rows();
    for p in &pieces[1..] {
        let w = rows.last().unwrap().1;
        let add = p.diagram.rows();
        match p.glue {
            Some(Glue::North) => {
                rows.last_mut().unwrap().1 = add[0].1 + w;
                rows.extend(add[1..].iter().map(|&(l, r)| (l + w, r + w)));
            }
            Some(Glue::East) => {
                rows.extend(add.iter().map(|&(l, r)| (l + w - 1, r + w - 1)));
            }
            None => return Err(Error::InvalidDiagram("only the first piece may lack a glue".into())),
        }
    }
    Diagram::from_rows(&rows)
}

/// Closed-form counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Count {
    /// `P_n` with `P_0 = 0`, `P_1 = 1`, `P_{n+2} = 2 P_{n+1} + P_n`.
    Pell(usize),
    /// Lattice paths to `(i, j)` with steps `(1,0)`, `(0,1)`, `(1,1)`.
    Delannoy(usize, usize),
    /// `(3^{m-1} + 1) / 2` non-mixed diagrams of size `m`.
    NonMixedTotal(usize),
    /// `P_{m-2}` thick diagrams of size `m >= 3`; zero below.
    ThickTotal(usize),
    /// Thick diagrams of size `m` with `r` rows: `d_{m-r-1, r-2}`.
    ThickByRank(usize, usize),
    /// Order-consecutive partitions of `[m]` into `r` parts.
    OrderConsecutive(usize, usize),
    Catalan(usize),
}

fn overflow() -> Error {
    Error::OutOfBounds("count exceeds u128".into())
}

pub fn count_formula(c: Count) -> Result<u128> {
    match c {
        Count::Pell(n) => {
            let (mut a, mut b) = (0u128, 1u128);
            for _ in 0..n {
                let next = b.checked_mul(2).and_then(|t| t.checked_add(a)).ok_or_else(overflow)?;
                a = b;
                b = next;
            }
            Ok(a)
        }
        Count::Delannoy(i, j) => {
            let mut row = vec![1u128; j + 1];
            for _ in 0..i {
                let mut next = vec![1u128; j + 1];
                for y in 1..=j {
                    next[y] = row[y]
                        .checked_add(next[y - 1])
                        .and_then(|t| t.checked_add(row[y - 1]))
                        .ok_or_else(overflow)?;
                }
                row = next;
            }
            Ok(row[j])
        }
        Count::NonMixedTotal(m) => {
            if m == 0 {
                return Err(Error::OutOfBounds("size must be positive".into()));
            }
            let p = 3u128.checked_pow(m as u32 - 1).ok_or_else(overflow)?;
            Ok((p + 1) / 2)
        }
        Count::ThickTotal(m) => {
            if m < 3 {
                Ok(0)
            } else {
                count_formula(Count::Pell(m - 2))
            }
        }
        Count::ThickByRank(m, r) => {
            if r < 2 || m < r + 1 {
                Ok(0)
            } else {
                count_formula(Count::Delannoy(m - r - 1, r - 2))
            }
        }
        Count::OrderConsecutive(m, r) => {
            let table = order_consecutive_table(m)?;
            Ok(table[m].get(r).copied().unwrap_or(0))
        }
        Count::Catalan(n) => {
            let mut c = 1u128;
            for k in 0..n as u128 {
                // C_{k+1} = C_k * 2(2k+1) / (k+2)
                c = c.checked_mul(2 * (2 * k + 1)).ok_or_else(overflow)? / (k + 2);
            }
            Ok(c)
        }
    }
}

/// `table[m][r]` from the generating function
/// `zy (1 - z(1+y)) / (1 - 2z(1+y) + z^2 (1+y+y^2))`, via
/// `F_m = N_m + 2(1+y) F_{m-1} - (1+y+y^2) F_{m-2}` with numerator terms
/// `N_1 = y`, `N_2 = -y - y^2`.
fn order_consecutive_table(max: usize) -> Result<Vec<Vec<u128>>> {
    let width = max + 2;
    let mut f: Vec<Vec<i128>> = vec![vec![0; width]; max + 1];
    for m in 1..=max {
        let mut cur = vec![0i128; width];
        if m == 1 {
            cur[1] = 1;
        }
        if m == 2 {
            cur[1] -= 1;
            cur[2] -= 1;
        }
        for r in 0..width {
            let a = f[m - 1][r];
            if a != 0 {
                for (s, k) in [(0, 2i128), (1, 2)] {
                    if r + s < width {
                        cur[r + s] = cur[r + s].checked_add(k.checked_mul(a).ok_or_else(overflow)?).ok_or_else(overflow)?;
                    }
                }
            }
            if m >= 2 {
                let b = f[m - 2][r];
                if b != 0 {
                    for s in 0..3 {
                        if r + s < width {
                            cur[r + s] = cur[r + s].checked_sub(b).ok_or_else(overflow)?;
                        }
                    }
                }
            }
        }
        f[m] = cur;
    }
    f.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| u128::try_from(v).map_err(|_| Error::Internal("negative coefficient".into())))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountClass {
    NonMixed,
    Thick,
    All,
}

impl fmt::Display for CountClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountClass::NonMixed => "nonmixed",
            CountClass::Thick => "thick",
            CountClass::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub m: usize,
    pub r: Option<usize>,
    pub class: CountClass,
    pub brute: u128,
    pub closed: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("m\tr\tclass\tbrute\tclosed\n");
        for row in &self.rows {
            let r = row.r.map_or("-".to_string(), |r| r.to_string());
            s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", row.m, r, row.class, row.brute, row.closed));
        }
        s
    }
}

/// Largest size accepted by [`census`].
pub const CENSUS_LIMIT: usize = 11;

#[derive(Default)]
struct Tally {
    all: u128,
    nonmixed: HashMap<usize, u128>,
    thick: HashMap<usize, u128>,
}

/// Classifies every connected diagram of each size `m <= max` and compares
/// the totals (or, with `by_rank`, the counts per number of rows) with the
/// closed forms. Also checks that canonical words are distinct and rebuild
/// their diagrams. Any disagreement is an error.
pub fn census(max: usize, by_rank: bool) -> Result<CountTable> {
    if max > CENSUS_LIMIT {
        return Err(Error::Budget(format!("census sizes are limited to {CENSUS_LIMIT}")));
    }
    let mut table = CountTable::default();
    for m in 1..=max {
        let diagrams = diagrams_of_size(m)?;
        let words: Vec<Option<Word>> = diagrams
            .par_iter()
            .map(|d| -> Result<Option<Word>> {
                if !mixed_pairs(d)?.is_empty() {
                    return Ok(None);
                }
                let w = canonical_word(d)?;
                if word_to_diagram(&w) != *d {
                    return Err(Error::Internal(format!("canonical word {w} does not rebuild {d}")));
                }
                Ok(Some(w))
            })
            .collect::<Result<_>>()?;
        let mut distinct: Vec<&Word> = words.iter().flatten().collect();
        let total = distinct.len();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != total {
            return Err(Error::Internal(format!("canonical words collide at size {m}")));
        }
        let mut tally = Tally {
            all: diagrams.len() as u128,
            ..Tally::default()
        };
        for (d, w) in diagrams.iter().zip(&words) {
            if w.is_some() {
                *tally.nonmixed.entry(d.rank()).or_default() += 1;
                if is_thick(d)? {
                    *tally.thick.entry(d.rank()).or_default() += 1;
                }
            }
        }
        let mut rows = Vec::new();
        if by_rank {
            for r in 1..=m {
                rows.push(CountRow {
                    m,
                    r: Some(r),
                    class: CountClass::NonMixed,
                    brute: tally.nonmixed.get(&r).copied().unwrap_or(0),
                    closed: count_formula(Count::OrderConsecutive(m, r))?,
                });
                rows.push(CountRow {
                    m,
                    r: Some(r),
                    class: CountClass::Thick,
                    brute: tally.thick.get(&r).copied().unwrap_or(0),
                    closed: count_formula(Count::ThickByRank(m, r))?,
                });
            }
        }
        rows.push(CountRow {
            m,
            r: None,
            class: CountClass::NonMixed,
            brute: tally.nonmixed.values().sum(),
            closed: count_formula(Count::NonMixedTotal(m))?,
        });
        rows.push(CountRow {
            m,
            r: None,
            class: CountClass::Thick,
            brute: tally.thick.values().sum(),
            closed: count_formula(Count::ThickTotal(m))?,
        });
        rows.push(CountRow {
            m,
            r: None,
            class: CountClass::All,
            brute: tally.all,
            closed: count_formula(Count::Catalan(m))?,
        });
        for row in &rows {
            if row.brute != row.closed {
                return Err(Error::CensusMismatch {
                    m: row.m,
                    r: row.r,
                    class: row.class.to_string(),
                    brute: row.brute,
                    closed: row.closed,
                });
            }
        }
        table.rows.extend(rows);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_many_diagrams() {
        let counts: Vec<_> = (1..=6).map(|m| diagrams_of_size(m).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn words_with_the_same_diagram() {
        let d = word_to_diagram(&w("SRC"));
        for other in ["CRC", "TCC", "RCC", "SSR", "SCR", "CSR", "CCR"] {
            assert_eq!(word_to_diagram(&w(other)), d, "{other}");
        }
        assert_eq!(canonical_word(&d).unwrap(), w("CCR"));
        assert_eq!(canonical_word(&word_to_diagram(&w(""))).unwrap(), w(""));
    }

    #[test]
    fn staircase_pieces() {
        let d = word_to_diagram(&w("CCCTCTCSRTSRTS"));
        assert_eq!(d.rows(), vec![(0, 6), (3, 6), (4, 7), (4, 7), (6, 8), (6, 8), (7, 9)]);
        assert_eq!(canonical_word(&d).unwrap(), w("CCCTCTCSRTSRTS"));
        let pieces = thick_decompose(&d).unwrap();
        let thick = pieces.iter().filter(|p| is_thick(&p.diagram).unwrap()).count();
        let single = pieces.iter().filter(|p| p.diagram.size() == 1).count();
        assert_eq!((thick, single, pieces.len()), (2, 5, 7));
        assert_eq!(pieces[3].diagram, word_to_diagram(&w("CRTCSR")));
        assert_eq!(glue_pieces(&pieces).unwrap(), d);
    }

    #[test]
    fn formulas() {
        assert_eq!(count_formula(Count::Pell(4)).unwrap(), 12);
        assert_eq!(count_formula(Count::NonMixedTotal(5)).unwrap(), 41);
        assert_eq!(count_formula(Count::Delannoy(2, 1)).unwrap(), 5);
        assert_eq!(count_formula(Count::Catalan(7)).unwrap(), 429);
        let oc: Vec<_> = (1..=3).map(|r| count_formula(Count::OrderConsecutive(3, r)).unwrap()).collect();
        assert_eq!(oc, vec![1, 3, 1]);
    }

    #[test]
    fn small_census() {
        let t = census(6, true).unwrap();
        let m6 = t.rows.iter().find(|r| r.m == 6 && r.r.is_none() && r.class == CountClass::Thick).unwrap();
        assert_eq!(m6.brute, 12);
        let m6r3 = t.rows.iter().find(|r| r.m == 6 && r.r == Some(3) && r.class == CountClass::Thick).unwrap();
        assert_eq!(m6r3.brute, 5);
        assert!(t.to_tsv().starts_with("m\tr\tclass\tbrute\tclosed\n"));
    }
}
