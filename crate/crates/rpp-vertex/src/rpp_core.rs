//! Reverse plane partitions: validation, volume, enumeration, and the
//! bijection with interlacing sequences read along diagonals.
//!
//! The diagonal through cell `(r, c)` has content `c − r`. For a shape with
//! `ℓ = λ′_1` rows, slice `k ∈ 1..=n` (`n = λ_1 + ℓ − 1`) is the diagonal of
//! content `k − ℓ`, read from its top cell downwards. Consecutive slices
//! interlace in the direction given by the Maya diagram of the shape.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition, Relation};

/// A reverse plane partition: nonnegative entries weakly increasing along
/// rows (left to right) and columns (bottom to top).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RppJson", into = "RppJson")]
pub struct RPP {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

/// Serialised form `{"shape":[...], "rows":[[bottom row], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RppJson {
    pub shape: Partition,
    pub rows: Vec<Vec<u64>>,
}

impl TryFrom<RppJson> for RPP {
    type Error = Error;
    fn try_from(j: RppJson) -> Result<Self> {
        RPP::new(j.shape, j.rows)
    }
}

impl From<RPP> for RppJson {
    fn from(r: RPP) -> Self {
        RppJson { shape: r.shape, rows: r.rows }
    }
}

impl RPP {
    /// Validates a filling given as rows listed bottom-up.
    pub fn new(shape: Partition, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::ShapeMismatch {
                shape: shape.parts().to_vec(),
                reason: format!("{} rows given for {} parts", rows.len(), shape.len()),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i + 1) {
                return Err(Error::ShapeMismatch {
                    shape: shape.parts().to_vec(),
                    reason: format!("row {} has {} entries, expected {}", i + 1, row.len(), shape.part(i + 1)),
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for j in 1..row.len() {
                if row[j - 1] > row[j] {
                    return Err(Error::NotMonotone {
                        first: (i + 1, j),
                        first_value: row[j - 1],
                        second: (i + 1, j + 1),
                        second_value: row[j],
                    });
                }
            }
            if i > 0 {
                for (j, &v) in row.iter().enumerate() {
                    if rows[i - 1][j] > v {
                        return Err(Error::NotMonotone {
                            first: (i, j + 1),
                            first_value: rows[i - 1][j],
                            second: (i + 1, j + 1),
                            second_value: v,
                        });
                    }
                }
            }
        }
        Ok(RPP { shape, rows })
    }

    /// Validates a filling given as rows listed top-down (as drawn).
    pub fn from_rows_top_down(shape: Partition, mut rows: Vec<Vec<u64>>) -> Result<Self> {
        rows.reverse();
        RPP::new(shape, rows)
    }

    /// The all-zero filling.
    pub fn zero(shape: &Partition) -> Self {
        let rows = shape.parts().iter().map(|&p| vec![0; p]).collect();
        RPP { shape: shape.clone(), rows }
    }

    /// The shape.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows listed bottom-up.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry of a cell, `None` outside the shape.
    pub fn get(&self, c: Cell) -> Option<u64> {
        if self.shape.contains(c) {
            Some(self.rows[c.row - 1][c.col - 1])
        } else {
            None
        }
    }

    /// Sum of the entries, `|Λ|`.
    pub fn volume(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// Largest entry (zero for the empty shape).
    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Builds an RPP cellwise from a closure (validated).
    pub fn from_fn(shape: &Partition, mut f: impl FnMut(Cell) -> u64) -> Result<Self> {
        let rows = (1..=shape.len())
            .map(|r| (1..=shape.part(r)).map(|c| f(Cell::new(r, c))).collect())
            .collect();
        RPP::new(shape.clone(), rows)
    }
}

/// `λ_1 + λ′_1 − 1`, the number of nonempty slices (0 for the empty shape).
pub fn num_slices(lambda: &Partition) -> usize {
    (lambda.first() + lambda.len()).saturating_sub(1)
}

/// Cells of slice `k` (1-based) from the top of the diagonal downwards.
pub fn diagonal_cells(lambda: &Partition, k: usize) -> Vec<Cell> {
    let d = k as i64 - lambda.len() as i64;
    (1..=lambda.len())
        .rev()
        .filter_map(|r| {
            let c = r as i64 + d;
            if c >= 1 && c as usize <= lambda.part(r) {
                Some(Cell::new(r, c as usize))
            } else {
                None
            }
        })
        .collect()
}

/// The interaction pattern `I_0, …, I_n`: `⪯` at holes and `⪰` at particles
/// of the Maya diagram of `λ`, read at offsets `−λ′_1 + k + ½`.
pub fn interaction_pattern(lambda: &Partition) -> Vec<Relation> {
    let ell = lambda.len() as i64;
    let total = lambda.first() + lambda.len();
    (0..total)
        .map(|k| {
            let offset = k as i64 - ell;
            let particle = (1..=lambda.len()).any(|i| lambda.part(i) as i64 - i as i64 == offset);
            if particle {
                Relation::Above
            } else {
                Relation::Below
            }
        })
        .collect()
}

/// Recovers the shape whose interaction pattern is `pattern`.
pub fn shape_from_pattern(pattern: &[Relation]) -> Result<Partition> {
    if pattern.is_empty() {
        return Ok(Partition::empty());
    }
    if pattern[0] != Relation::Below || pattern[pattern.len() - 1] != Relation::Above {
        return Err(Error::BadPattern("a shape's pattern starts with ⪯ and ends with ⪰".into()));
    }
    let mut holes = 0;
    let mut parts = Vec::new();
    for r in pattern {
        match r {
            Relation::Below => holes += 1,
            Relation::Above => parts.push(holes),
        }
    }
    parts.reverse();
    Partition::new(parts)
}

/// An interlacing sequence `∅ = λ^(0) I_0 λ^(1) I_1 … I_n λ^(n+1) = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SliceSequence {
    pub pattern: Vec<Relation>,
    /// `pattern.len() + 1` partitions, the first and last empty.
    pub slices: Vec<Partition>,
}

impl SliceSequence {
    /// Formats as `∅ ⪯ (3) ⪰ (1) …`.
    pub fn to_text(&self) -> String {
        let mut s = self.slices[0].to_string();
        for (r, p) in self.pattern.iter().zip(&self.slices[1..]) {
            s.push(' ');
            s.push_str(r.symbol());
            s.push(' ');
            s.push_str(&p.to_string());
        }
        s
    }
}

/// Reads the diagonals of an RPP.
pub fn to_slices(rpp: &RPP) -> SliceSequence {
    let shape = rpp.shape();
    let n = num_slices(shape);
    let mut slices = vec![Partition::empty()];
    for k in 1..=n {
        let vals = diagonal_cells(shape, k)
            .into_iter()
            .map(|c| rpp.get(c).expect("diagonal cell in shape") as usize)
            .collect();
        slices.push(Partition::from_padded(vals).expect("RPP diagonals are weakly decreasing"));
    }
    if !shape.is_empty() {
        slices.push(Partition::empty());
    }
    SliceSequence { pattern: interaction_pattern(shape), slices }
}

/// Inverse of [`to_slices`].
pub fn from_slices(s: &SliceSequence) -> Result<RPP> {
    let shape = shape_from_pattern(&s.pattern)?;
    if interaction_pattern(&shape) != s.pattern {
        return Err(Error::BadPattern("pattern is not a shape profile".into()));
    }
    if s.slices.len() != s.pattern.len() + 1 {
        return Err(Error::InterlacingViolated {
            step: 0,
            reason: format!("{} slices for a pattern of length {}", s.slices.len(), s.pattern.len()),
        });
    }
    if !s.slices[0].is_empty() || !s.slices[s.slices.len() - 1].is_empty() {
        return Err(Error::InterlacingViolated { step: 0, reason: "end slices must be empty".into() });
    }
    for (k, r) in s.pattern.iter().enumerate() {
        if !r.holds(&s.slices[k], &s.slices[k + 1]) {
            return Err(Error::InterlacingViolated {
                step: k,
                reason: format!("{} {} {} fails", s.slices[k], r.symbol(), s.slices[k + 1]),
            });
        }
    }
    let mut rows: Vec<Vec<u64>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    for k in 1..=num_slices(&shape) {
        let cells = diagonal_cells(&shape, k);
        if s.slices[k].len() > cells.len() {
            return Err(Error::InterlacingViolated {
                step: k,
                reason: format!("slice {} has more parts than its diagonal ({})", s.slices[k], cells.len()),
            });
        }
        for (i, c) in cells.iter().enumerate() {
            rows[c.row - 1][c.col - 1] = s.slices[k].part(i + 1) as u64;
        }
    }
    RPP::new(shape, rows)
}

/// Calls `visit` on every RPP of shape `λ` with volume at most `max_volume`,
/// in lexicographic order of the reading word (concatenated zero-padded
/// slices). Generation walks the interlacing chain slice by slice.
pub fn visit_rpps(lambda: &Partition, max_volume: u64, mut visit: impl FnMut(&RPP)) {
    if lambda.is_empty() {
        visit(&RPP::zero(lambda));
        return;
    }
    let pattern = interaction_pattern(lambda);
    let n = num_slices(lambda);
    let diags: Vec<Vec<Cell>> = (0..=n).map(|k| if k == 0 { vec![] } else { diagonal_cells(lambda, k) }).collect();
    let mut slices: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut rows: Vec<Vec<u64>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let ctx = EnumCtx { lambda, pattern: &pattern, diags: &diags, n };
    ctx.rec(1, max_volume as usize, &mut slices, &mut rows, &mut visit);
}

struct EnumCtx<'a> {
    lambda: &'a Partition,
    pattern: &'a [Relation],
    diags: &'a [Vec<Cell>],
    n: usize,
}

impl EnumCtx<'_> {
    fn rec(
        &self,
        k: usize,
        budget: usize,
        slices: &mut Vec<Vec<usize>>,
        rows: &mut Vec<Vec<u64>>,
        visit: &mut impl FnMut(&RPP),
    ) {
        if k > self.n {
            // Final relation with the empty slice.
            let last = &slices[self.n];
            let ok = match self.pattern[self.n] {
                Relation::Above => true,
                Relation::Below => last.iter().all(|&v| v == 0),
            };
            if ok {
                visit(&RPP { shape: self.lambda.clone(), rows: rows.clone() });
            }
            return;
        }
        let len = self.diags[k].len();
        let prev = slices[k - 1].clone();
        let at = |i: usize| -> usize { if i == 0 { usize::MAX } else { prev.get(i - 1).copied().unwrap_or(0) } };
        // Bounds for part i (1-based) of the new slice.
        let bounds: Vec<(usize, usize)> = (1..=len)
            .map(|i| match self.pattern[k - 1] {
                Relation::Below => (at(i), at(i - 1)),
                Relation::Above => (at(i + 1), at(i)),
            })
            .collect();
        // Parts beyond the diagonal length must be forced to zero.
        let beyond_ok = match self.pattern[k - 1] {
            Relation::Below => at(len + 1) == 0,
            Relation::Above => at(len + 2) == 0,
        };
        if !beyond_ok || bounds.iter().any(|&(lo, hi)| lo > hi) {
            return;
        }
        let min_sum: usize = bounds.iter().map(|b| b.0).sum();
        if min_sum > budget {
            return;
        }
        let mut cur = vec![0usize; len];
        self.parts(k, 0, &bounds, budget, &mut cur, slices, rows, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn parts(
        &self,
        k: usize,
        i: usize,
        bounds: &[(usize, usize)],
        budget: usize,
        cur: &mut Vec<usize>,
        slices: &mut Vec<Vec<usize>>,
        rows: &mut Vec<Vec<u64>>,
        visit: &mut impl FnMut(&RPP),
    ) {
        if i == bounds.len() {
            for (c, &v) in self.diags[k].iter().zip(cur.iter()) {
                rows[c.row - 1][c.col - 1] = v as u64;
            }
            slices[k] = cur.clone();
            self.rec(k + 1, budget, slices, rows, visit);
            return;
        }
        let rest_min: usize = bounds[i + 1..].iter().map(|b| b.0).sum();
        let (lo, hi) = bounds[i];
        // Weak decrease is implied by the bounds, except that part i must not
        // exceed part i−1 chosen here.
        let hi = if i > 0 { hi.min(cur[i - 1]) } else { hi };
        let mut v = lo;
        while v <= hi && v + rest_min <= budget {
            cur[i] = v;
            self.parts(k, i + 1, bounds, budget - v, cur, slices, rows, visit);
            v += 1;
        }
    }
}

/// All RPPs of shape `λ` with volume at most `max_volume`.
pub fn enumerate(lambda: &Partition, max_volume: u64) -> Vec<RPP> {
    let mut out = Vec::new();
    visit_rpps(lambda, max_volume, |r| out.push(r.clone()));
    out
}

/// Number of RPPs of shape `λ` of each volume `0..=max_volume`.
pub fn count_by_volume(lambda: &Partition, max_volume: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_volume as usize + 1];
    visit_rpps(lambda, max_volume, |r| counts[r.volume() as usize] += 1);
    counts
}
