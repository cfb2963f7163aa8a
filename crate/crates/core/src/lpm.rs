//! Lattice path matroids. A diagram is the region between a lower path `P`
//! and an upper path `Q` from `(0,0)` to `(m,r)`; element `i` of the matroid
//! is step `i` of the paths.
//!
//! Row `i` (from the bottom, 1-based) spans the vertical edges with
//! `x` in `[L_i, R_i]`, where `L_i` and `R_i` are the `x` coordinates of the
//! `i`-th north steps of `Q` and `P`. The edge at `x` in row `i` carries the
//! label `x + i`, so `N_i = [L_i + i, R_i + i]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::CyclicFlatMatroid;
use crate::subset::{Subset, MAX_GROUND};
use crate::transversal::{matroid_of, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    fn flip(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

/// A word over `{N, E}` read from `(0,0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath(Vec<Step>);

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidDiagram("empty path".into()));
        }
        Ok(LatticePath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norths(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::N).count()
    }

    /// `x` coordinate of each north step, in order.
    pub fn north_xs(&self) -> Vec<usize> {
        let mut x = 0;
        let mut out = Vec::new();
        for &s in &self.0 {
            match s {
                Step::N => out.push(x),
                Step::E => x += 1,
            }
        }
        out
    }

    /// Number of north steps among the first `k` steps.
    pub fn norths_before(&self, k: usize) -> usize {
        self.0[..k].iter().filter(|&&s| s == Step::N).count()
    }

    fn swapped(&self) -> LatticePath {
        LatticePath(self.0.iter().map(|s| s.flip()).collect())
    }

    fn reversed(&self) -> LatticePath {
        LatticePath(self.0.iter().rev().copied().collect())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::InvalidDiagram(format!("step {other:?} is not N or E"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

/// A lattice path diagram: `lower` (P) never rises above `upper` (Q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    upper: LatticePath,
    lower: LatticePath,
}

impl Diagram {
    pub fn new(upper: LatticePath, lower: LatticePath) -> Result<Self> {
        if upper.len() != lower.len() {
            return Err(Error::InvalidDiagram("paths have different lengths".into()));
        }
        if upper.len() > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(upper.len()));
        }
        if upper.norths() != lower.norths() {
            return Err(Error::InvalidDiagram("paths end at different points".into()));
        }
        let (mut q, mut p) = (0, 0);
        for (k, (&a, &b)) in upper.steps().iter().zip(lower.steps()).enumerate() {
            q += usize::from(a == Step::N);
            p += usize::from(b == Step::N);
            if p > q {
                return Err(Error::InvalidDiagram(format!(
                    "lower path rises above the upper path after step {}",
                    k + 1
                )));
            }
        }
        Ok(Diagram { upper, lower })
    }

    /// Parses `upper` and `lower` step words.
    pub fn parse(upper: &str, lower: &str) -> Result<Self> {
        Diagram::new(upper.parse()?, lower.parse()?)
    }

    /// Diagram with rows `(L_i, R_i)`; the width is `R_r`.
    pub fn from_rows(rows: &[(usize, usize)]) -> Result<Self> {
        let Some(&(_, m)) = rows.last() else {
            return Err(Error::InvalidDiagram("no rows".into()));
        };
        if rows[0].0 != 0 {
            return Err(Error::InvalidDiagram("first row must start at x = 0".into()));
        }
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let (mut ql, mut pr) = (0, 0);
        for &(l, r) in rows {
            if l > r || l < ql || r < pr {
                return Err(Error::InvalidDiagram(format!("row ({l}, {r}) breaks monotonicity")));
            }
            upper.extend(std::iter::repeat(Step::E).take(l - ql));
            upper.push(Step::N);
            lower.extend(std::iter::repeat(Step::E).take(r - pr));
            lower.push(Step::N);
            ql = l;
            pr = r;
        }
        upper.extend(std::iter::repeat(Step::E).take(m - ql));
        Diagram::new(LatticePath(upper), LatticePath(lower))
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }

    /// Number of elements, the common path length.
    pub fn n(&self) -> usize {
        self.upper.len()
    }

    /// Rank, the number of north steps.
    pub fn rank(&self) -> usize {
        self.upper.norths()
    }

    /// Width `m`, the number of east steps.
    pub fn width(&self) -> usize {
        self.n() - self.rank()
    }

    /// Size in the enumeration sense: path length minus one.
    pub fn size(&self) -> usize {
        self.n() - 1
    }

    pub fn rows(&self) -> Vec<(usize, usize)> {
        self.upper
            .north_xs()
            .into_iter()
            .zip(self.lower.north_xs())
            .collect()
    }

    /// True when the paths meet only at their endpoints.
    pub fn is_connected(&self) -> bool {
        let (mut q, mut p) = (0, 0);
        let n = self.n();
        for k in 0..n - 1 {
            q += usize::from(self.upper.0[k] == Step::N);
            p += usize::from(self.lower.0[k] == Step::N);
            if q == p {
                return false;
            }
        }
        true
    }

    /// Splits at interior points where the paths touch; each piece is a
    /// connected diagram, and the matroid is their direct sum in order.
    pub fn components(&self) -> Vec<Diagram> {
        let mut out = Vec::new();
        let (mut q, mut p, mut start) = (0, 0, 0);
        for k in 0..self.n() {
            q += usize::from(self.upper.0[k] == Step::N);
            p += usize::from(self.lower.0[k] == Step::N);
            if q == p {
                out.push(Diagram {
                    upper: LatticePath(self.upper.0[start..=k].to_vec()),
                    lower: LatticePath(self.lower.0[start..=k].to_vec()),
                });
                start = k + 1;
            }
        }
        out
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            upper: self.upper.to_string(),
            lower: self.lower.to_string(),
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        Diagram::parse(&json.upper, &json.lower)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q={} P={}", self.upper, self.lower)
    }
}

/// Interchange form: `{"upper": "NNE..", "lower": "EEN.."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub upper: String,
    pub lower: String,
}

/// `N_i = [l_i, u_i]` from the `i`-th north steps of `Q` and `P`.
pub fn path_presentation(d: &Diagram) -> SetSystem {
    let sets = d
        .rows()
        .into_iter()
        .enumerate()
        .map(|(i, (l, r))| Subset::interval(l + i + 1, r + i + 1))
        .collect();
    SetSystem::new(d.n(), sets).expect("intervals lie in [n]")
}

pub fn lpm_matroid(d: &Diagram) -> Result<CyclicFlatMatroid> {
    matroid_of(&path_presentation(d))
}

/// Rows labelled `1..=r` bottom-up and columns `r+1..=n` left to right; `A_i`
/// holds `i` and every column with a square in row `i`.
pub fn rook_presentation(d: &Diagram) -> SetSystem {
    let r = d.rank();
    let sets = d
        .rows()
        .into_iter()
        .enumerate()
        .map(|(i, (l, rr))| Subset::singleton(i + 1) | Subset::interval(r + 1 + l, r + rr))
        .collect();
    SetSystem::new(d.n(), sets).expect("labels lie in [n]")
}

pub fn rook_matroid(d: &Diagram) -> Result<CyclicFlatMatroid> {
    matroid_of(&rook_presentation(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CornerKind {
    /// `[a]` from an `EN` corner of the upper path.
    Initial,
    /// `[b, n]` from an `NE` corner of the lower path.
    Final,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CornerFlat {
    pub kind: CornerKind,
    pub interval: Subset,
    pub corner: (usize, usize),
}

impl CornerFlat {
    /// `a` for `[a]`, `b` for `[b, n]`.
    pub fn endpoint(&self) -> usize {
        match self.kind {
            CornerKind::Initial => self.interval.max().unwrap(),
            CornerKind::Final => self.interval.min().unwrap(),
        }
    }
}

/// Initial flats in increasing order, then final flats in decreasing order
/// of their first element.
pub fn corner_flats(d: &Diagram) -> Result<Vec<CornerFlat>> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = d.n();
    let mut out = Vec::new();
    let mut pos = (0, 0);
    let q = d.upper.steps();
    for a in 1..n {
        advance(&mut pos, q[a - 1]);
        if q[a - 1] == Step::E && q[a] == Step::N {
            out.push(CornerFlat {
                kind: CornerKind::Initial,
                interval: Subset::interval(1, a),
                corner: pos,
            });
        }
    }
    let p = d.lower.steps();
    let mut pos = (0, 0);
    for b in 2..=n {
        advance(&mut pos, p[b - 2]);
        if p[b - 2] == Step::N && p[b - 1] == Step::E {
            out.push(CornerFlat {
                kind: CornerKind::Final,
                interval: Subset::interval(b, n),
                corner: pos,
            });
        }
    }
    Ok(out)
}

fn advance(pos: &mut (usize, usize), s: Step) {
    match s {
        Step::N => pos.1 += 1,
        Step::E => pos.0 += 1,
    }
}

pub fn initial_flats(d: &Diagram) -> Result<Vec<CornerFlat>> {
    Ok(corner_flats(d)?
        .into_iter()
        .filter(|c| c.kind == CornerKind::Initial)
        .collect())
}

pub fn final_flats(d: &Diagram) -> Result<Vec<CornerFlat>> {
    Ok(corner_flats(d)?
        .into_iter()
        .filter(|c| c.kind == CornerKind::Final)
        .collect())
}

/// `(A, B)` with corners `(a1, a2)`, `(b1, b2)` is mixed when `a1 < b1` and
/// `a2 > b2`.
pub fn is_mixed(a: &CornerFlat, b: &CornerFlat) -> bool {
    a.corner.0 < b.corner.0 && a.corner.1 > b.corner.1
}

pub fn mixed_pairs(d: &Diagram) -> Result<Vec<(CornerFlat, CornerFlat)>> {
    let init = initial_flats(d)?;
    let fin = final_flats(d)?;
    let mut out = Vec::new();
    for a in &init {
        for b in &fin {
            if is_mixed(a, b) {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

/// Counting criterion: modular iff the number of path-presentation sets
/// meeting both `A` and `B` is at most `|A ∩ B|`.
pub fn is_modular_corner_pair(d: &Diagram, a: &CornerFlat, b: &CornerFlat) -> bool {
    let both = path_presentation(d)
        .sets()
        .iter()
        .filter(|s| !s.is_disjoint(a.interval) && !s.is_disjoint(b.interval))
        .count();
    both <= (a.interval & b.interval).len()
}

/// A lattice path matroid is fundamental transversal exactly when no
/// connected component has a mixed pair.
pub fn is_fundamental(d: &Diagram) -> bool {
    d.components()
        .iter()
        .all(|c| mixed_pairs(c).map_or(false, |v| v.is_empty()))
}

/// Rank of the interval `[a, b]`: the smaller of its length and the number
/// of path-presentation sets it meets.
pub fn interval_rank(d: &Diagram, a: usize, b: usize) -> Result<usize> {
    if a == 0 || a > b || b > d.n() {
        return Err(Error::OutOfBounds(format!("[{a}, {b}] is not an interval of [{}]", d.n())));
    }
    let x = Subset::interval(a, b);
    let t = path_presentation(d)
        .sets()
        .iter()
        .filter(|s| !s.is_disjoint(x))
        .count();
    Ok(t.min(b - a + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Transform {
    /// Reflect in `y = x`; the matroid becomes its dual.
    DualFlip,
    /// Rotate by a half turn; element `i` becomes `n + 1 - i`.
    Rotate180,
}

pub fn transform(d: &Diagram, mode: Transform) -> Diagram {
    match mode {
        Transform::DualFlip => Diagram {
            upper: d.lower.swapped(),
            lower: d.upper.swapped(),
        },
        Transform::Rotate180 => Diagram {
            upper: d.lower.reversed(),
            lower: d.upper.reversed(),
        },
    }
}

/// Result of restricting to an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Restriction {
    Diagram(Diagram),
    /// The restriction is the free matroid on this many elements.
    Free(usize),
}

/// Restriction to `[a, b]`, relabelled onto `[b - a + 1]`. Takes the lowest
/// north step that can be step `a` and the highest that can be step `b`,
/// and keeps the region between them; when the first is not left of the
/// second the restriction is free.
pub fn restrict(d: &Diagram, a: usize, b: usize) -> Result<Restriction> {
    if a == 0 || a > b || b > d.n() {
        return Err(Error::OutOfBounds(format!("[{a}, {b}] is not an interval of [{}]", d.n())));
    }
    let rows = d.rows();
    let holds = |i: usize, label: usize| {
        let (l, r) = rows[i - 1];
        label >= i && (l..=r).contains(&(label - i))
    };
    let ia = (1..=rows.len()).find(|&i| holds(i, a)).ok_or(Error::Loop(a))?;
    let ib = (1..=rows.len()).rev().find(|&i| holds(i, b)).ok_or(Error::Loop(b))?;
    let (xa, xb) = (a - ia, b - ib);
    if xa >= xb {
        return Ok(Restriction::Free(b - a + 1));
    }
    if ib < ia {
        return Err(Error::Internal(format!("restriction to [{a}, {b}] has no rows")));
    }
    let clipped: Vec<(usize, usize)> = rows[ia - 1..ib]
        .iter()
        .map(|&(l, r)| (l.max(xa) - xa, r.min(xb) - xa))
        .collect();
    Ok(Restriction::Diagram(Diagram::from_rows(&clipped)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> Diagram {
        Diagram::parse("NNENNENEE", "EENENNENN").unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn running_example_presentation() {
        let sets = path_presentation(&running()).sets().to_vec();
        assert_eq!(sets[0], s(&[1, 2, 3]));
        assert_eq!(sets[4], s(&[7, 8, 9]));
        assert_eq!(running().rows(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn running_example_corners() {
        let c = corner_flats(&running()).unwrap();
        let summary: Vec<_> = c.iter().map(|c| (c.kind, c.interval, c.corner)).collect();
        assert_eq!(
            summary,
            vec![
                (CornerKind::Initial, s(&[1, 2, 3]), (1, 2)),
                (CornerKind::Initial, Subset::interval(1, 6), (2, 4)),
                (CornerKind::Final, Subset::interval(4, 9), (2, 1)),
                (CornerKind::Final, Subset::interval(7, 9), (3, 3)),
            ]
        );
        let mixed: Vec<_> = mixed_pairs(&running())
            .unwrap()
            .iter()
            .map(|(a, b)| (a.endpoint(), b.endpoint()))
            .collect();
        assert_eq!(mixed, vec![(3, 4), (6, 7)]);
    }

    #[test]
    fn rook_presentation_of_running_example() {
        let a = rook_presentation(&running());
        assert_eq!(
            a.sets(),
            &[s(&[1, 6, 7]), s(&[2, 6, 7, 8]), s(&[3, 7, 8]), s(&[4, 7, 8, 9]), s(&[5, 8, 9])]
        );
        let square = Diagram::parse("NE", "EN").unwrap();
        assert_eq!(rook_presentation(&square).sets(), &[s(&[1, 2])]);
    }

    #[test]
    fn restrictions_of_running_example() {
        let d = running();
        let Restriction::Diagram(r28) = restrict(&d, 2, 8).unwrap() else { panic!() };
        assert_eq!(r28.rows(), vec![(0, 1), (0, 2), (0, 2), (0, 2), (1, 2)]);
        let Restriction::Diagram(r27) = restrict(&d, 2, 7).unwrap() else { panic!() };
        assert_eq!(r27.rows(), vec![(0, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(restrict(&d, 2, 5).unwrap(), Restriction::Free(4));
        assert_eq!(restrict(&d, 3, 5).unwrap(), Restriction::Free(3));
        assert_eq!(restrict(&d, 1, 9).unwrap(), Restriction::Diagram(d));
    }

    #[test]
    fn transforms() {
        let sq = Diagram::parse("NE", "EN").unwrap();
        assert_eq!(transform(&sq, Transform::DualFlip), sq);
        let d = running();
        let rot = transform(&d, Transform::Rotate180);
        assert_eq!(rot.upper().to_string(), "NNENNENEE");
        assert_eq!(rot.lower().to_string(), "EENENNENN");
        assert_eq!(transform(&transform(&d, Transform::DualFlip), Transform::DualFlip), d);
    }

    #[test]
    fn interval_ranks() {
        let d = running();
        assert_eq!(interval_rank(&d, 4, 9).unwrap(), 4);
        assert_eq!(interval_rank(&d, 3, 5).unwrap(), 3);
        assert_eq!(interval_rank(&d, 5, 5).unwrap(), 1);
    }

    #[test]
    fn components_split_at_touch_points() {
        let d = Diagram::parse("NEN", "ENN").unwrap();
        let parts = d.components();
        assert_eq!(parts.len(), 2);
        assert!(!d.is_connected());
        assert!(is_fundamental(&d));
        assert!(!is_fundamental(&running()));
    }
}
