//! Integer partitions, Young-diagram geometry (French convention), Maya
//! diagrams, hook lengths and border-strip decompositions.
//!
//! Cells are addressed by `(row, col)`, both 1-based, with row 1 at the bottom.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, implicitly zero-extended.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a weakly decreasing list that may end in zeros;
    /// trailing zeros are stripped.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The stored (positive) parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of positive parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Parts zero-padded (or truncated) to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    /// The conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff `c` is a cell of the diagram.
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// All cells, row by row from the bottom, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    /// True iff the diagram of `self` contains the diagram of `other`.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// A cell of a Young diagram: `row` counted from the bottom, `col` from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col − row`, the index of the diagonal (slice) through the cell.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// The two interlacing relations between consecutive slices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    /// `μ ⪯ λ`: the next partition is obtained by adding a horizontal strip.
    #[serde(rename = "<=")]
    Below,
    /// `μ ⪰ λ`: the next partition is obtained by removing a horizontal strip.
    #[serde(rename = ">=")]
    Above,
}

impl Relation {
    /// True iff `prev rel next` holds.
    pub fn holds(self, prev: &Partition, next: &Partition) -> bool {
        match self {
            Relation::Below => interlaces(prev, next),
            Relation::Above => interlaces(next, prev),
        }
    }

    /// The mathematical symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Below => "⪯",
            Relation::Above => "⪰",
        }
    }
}

/// `μ ⪯ λ`: `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …` with zero extension.
pub fn interlaces(mu: &Partition, lambda: &Partition) -> bool {
    if lambda.len() > mu.len() + 1 || mu.len() > lambda.len() {
        return false;
    }
    (1..=lambda.len()).all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// Arm length `λ_row − col` of a cell.
pub fn arm(lambda: &Partition, c: Cell) -> Result<usize> {
    check_cell(lambda, c)?;
    Ok(lambda.part(c.row) - c.col)
}

/// Leg length `λ′_col − row` of a cell.
pub fn leg(lambda: &Partition, c: Cell) -> Result<usize> {
    check_cell(lambda, c)?;
    Ok(lambda.conjugate().part(c.col) - c.row)
}

/// Hook length `arm + leg + 1`.
pub fn hook(lambda: &Partition, c: Cell) -> Result<usize> {
    Ok(arm(lambda, c)? + leg(lambda, c)? + 1)
}

/// Hook lengths of all cells, rows listed bottom-up.
pub fn hook_table(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    (1..=lambda.len())
        .map(|i| {
            (1..=lambda.part(i))
                .map(|j| (lambda.part(i) - j) + (conj.part(j) - i) + 1)
                .collect()
        })
        .collect()
}

fn check_cell(lambda: &Partition, c: Cell) -> Result<()> {
    if lambda.contains(c) {
        Ok(())
    } else {
        Err(Error::CellOutsideShape {
            row: c.row,
            col: c.col,
            shape: lambda.parts().to_vec(),
        })
    }
}

/// A finite window of a Maya diagram.
///
/// Site `k` (0-based) sits at half-integer offset `k − center + ½` from the
/// centre; `true` marks a particle. Particles of `λ` sit at `λ_i − i + ½`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayaDiagram {
    pub window: Vec<bool>,
    pub center: usize,
}

impl MayaDiagram {
    /// Builds a window and checks the tail and balance conditions: the first
    /// site is a particle, the last a hole, and the particles right of the
    /// centre are as many as the holes left of it.
    pub fn new(window: Vec<bool>, center: usize) -> Result<Self> {
        let needed = 1;
        if window.is_empty() || center == 0 || center >= window.len() {
            return Err(Error::WindowTooNarrow { half_width: window.len() / 2, needed });
        }
        if !window[0] || window[window.len() - 1] {
            return Err(Error::WindowTooNarrow { half_width: window.len() / 2, needed: window.len() / 2 + 1 });
        }
        let right_particles = window[center..].iter().filter(|&&b| b).count();
        let left_holes = window[..center].iter().filter(|&&b| !b).count();
        if right_particles != left_holes {
            return Err(Error::BadPattern(format!(
                "unbalanced Maya window: {right_particles} particles right of centre, {left_holes} holes left"
            )));
        }
        Ok(MayaDiagram { window, center })
    }

    /// Offset of site `k` from the centre, times two (an odd integer).
    pub fn doubled_offset(&self, k: usize) -> i64 {
        2 * (k as i64 - self.center as i64) + 1
    }

    /// Reads the partition back: each particle contributes the number of
    /// holes to its left.
    pub fn to_partition(&self) -> Partition {
        let mut holes = 0;
        let mut parts = Vec::new();
        for &b in &self.window {
            if b {
                if holes > 0 {
                    parts.push(holes);
                }
            } else {
                holes += 1;
            }
        }
        parts.reverse();
        Partition { parts }
    }

    /// `●`/`○` string with `|` at the centre.
    pub fn to_ascii(&self) -> String {
        let mut s = String::new();
        for (k, &b) in self.window.iter().enumerate() {
            if k == self.center {
                s.push('|');
            }
            s.push(if b { '●' } else { '○' });
        }
        s
    }
}

/// The Maya diagram of `λ` on `2·half_width` sites centred at the centre.
pub fn maya(lambda: &Partition, half_width: usize) -> Result<MayaDiagram> {
    let needed = lambda.len().max(lambda.first()) + 1;
    if half_width < needed {
        return Err(Error::WindowTooNarrow { half_width, needed });
    }
    let mut window = vec![false; 2 * half_width];
    // Particle i (1-based) at offset λ_i − i + ½, i.e. site center + λ_i − i.
    for i in 1..=half_width + lambda.len() {
        let site = half_width as i64 + lambda.part(i) as i64 - i as i64;
        if site >= 0 {
            window[site as usize] = true;
        }
    }
    MayaDiagram::new(window, half_width)
}

/// A border strip (rim hook) of a border-strip decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderStrip {
    /// 1-based strip number, 1 = outermost.
    pub index: usize,
    /// Cells from the top-left end to the bottom-right end.
    pub cells: Vec<Cell>,
}

/// Border-strip decomposition, outermost strip first.
///
/// Strip `k` is the rim of the shape `(λ_{i+k−1} − (k−1))_i` placed back at
/// offset `(k−1, k−1)`; on every diagonal it holds the `k`-th cell from the top.
pub fn border_strips(lambda: &Partition) -> Vec<BorderStrip> {
    let mut strips = Vec::new();
    let mut k = 1;
    loop {
        let inner: Vec<usize> = (1..=lambda.len())
            .map(|i| lambda.part(i + k - 1).saturating_sub(k - 1))
            .take_while(|&p| p > 0)
            .collect();
        if inner.is_empty() {
            break;
        }
        let mut cells = Vec::new();
        for r in (1..=inner.len()).rev() {
            let above = inner.get(r).copied().unwrap_or(0);
            let start = above.max(1);
            for c in start..=inner[r - 1] {
                cells.push(Cell::new(r, c));
            }
        }
        strips.push(BorderStrip { index: k, cells });
        k += 1;
    }
    strips
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_padded(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p(&[3, 2, 1, 1]), &p(&[5, 2, 2, 1, 1])));
        assert!(interlaces(&Partition::empty(), &Partition::empty()));
        assert!(!interlaces(&p(&[2]), &p(&[1])));
    }

    #[test]
    fn hook_examples() {
        let l = p(&[4, 3, 1]);
        assert_eq!(hook(&l, Cell::new(1, 1)).unwrap(), 6);
        assert_eq!(arm(&l, Cell::new(1, 2)).unwrap(), 2);
        assert_eq!(leg(&l, Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(hook(&l, Cell::new(1, 2)).unwrap(), 4);
        assert_eq!(hook(&p(&[1]), Cell::new(1, 1)).unwrap(), 1);
        assert!(hook(&l, Cell::new(3, 2)).is_err());
        assert_eq!(hook_table(&l), vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]]);
        assert_eq!(hook_table(&p(&[2, 2])), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn maya_examples() {
        let m = maya(&Partition::empty(), 3).unwrap();
        assert_eq!(m.to_ascii(), "●●●|○○○");
        let m = maya(&p(&[4, 3, 2, 2, 1]), 7).unwrap();
        // Sites from offset −6.5 to 6.5.
        assert_eq!(m.to_ascii(), "●●○●○●●|○●○●○○○");
        assert_eq!(m.to_partition(), p(&[4, 3, 2, 2, 1]));
        let m = maya(&p(&[4, 3, 1]), 5).unwrap();
        // Offsets −4.5..4.5: three packed particles, then ○●○○●○●, then holes.
        assert_eq!(m.to_ascii(), "●●○●○|○●○●○");
        assert!(maya(&p(&[4, 3, 1]), 4).is_err());
    }

    #[test]
    fn border_strip_examples() {
        let s = border_strips(&p(&[4, 4, 3, 3, 1]));
        assert_eq!(s.len(), 3);
        let c = |r, c| Cell::new(r, c);
        assert_eq!(
            s[0].cells,
            vec![c(5, 1), c(4, 1), c(4, 2), c(4, 3), c(3, 3), c(2, 3), c(2, 4), c(1, 4)]
        );
        assert_eq!(s[1].cells, vec![c(3, 1), c(3, 2), c(2, 2), c(1, 2), c(1, 3)]);
        assert_eq!(s[2].cells, vec![c(2, 1), c(1, 1)]);
        let s = border_strips(&p(&[1]));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].cells, vec![c(1, 1)]);
        let s = border_strips(&p(&[2, 2]));
        assert_eq!(s.iter().map(|b| b.cells.len()).collect::<Vec<_>>(), vec![3, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn json_roundtrip() {
        let l = p(&[4, 3, 1]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, "[4,3,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(serde_json::to_string(&Cell::new(1, 2)).unwrap(), r#"{"row":1,"col":2}"#);
    }
}
