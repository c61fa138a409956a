//! The `t = 0` regime: border-strip path families, the path-order
//! constraints characterising non-interacting pairs, the sliding bijection
//! onto single RPPs and its inverse, and the counting identity.
//!
//! Sliding works on fillings: red strip `i` moves diagonally down `i − 1`
//! steps onto strip `2i − 1`, blue strip `i` moves down `i` steps onto strip
//! `2i`. The path picture is used only by [`check_t0_constraints`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coupling::{coupled_pairs, tiling_of, PairRPP};
use crate::error::{Error, Result};
use crate::partitions::{border_strips, Cell, Partition, Relation};
use crate::qt_series::{hook_product_pair, hook_product_single};
use crate::rpp_core::{count_by_volume, enumerate, interaction_pattern, to_slices, RPP};

/// Index (1 = outermost) of the border strip containing `c`: one plus the
/// number of cells of `λ` above `c` on its diagonal.
pub fn strip_index(lambda: &Partition, c: Cell) -> usize {
    1 + (1..).take_while(|&s| lambda.contains(Cell::new(c.row + s, c.col + s))).count()
}

/// One border-strip path of a single colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderPath {
    /// Strip index, 1 = outermost ("uppermost path first").
    pub index: usize,
    /// Cells of the strip, upper-left end first.
    pub cells: Vec<Cell>,
    /// Filling values along `cells`: the path's height over each cell.
    pub heights: Vec<u64>,
    /// Particle column of the path on every slice line `0..=n+1`. Beyond the
    /// strip the path runs along the back wall at height 0.
    pub positions: Vec<i64>,
}

/// The border-strip paths of one RPP, ordered outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub shape: Partition,
    /// Strip kinds between consecutive lines (`⪯` strips hold white rows).
    pub kinds: Vec<Relation>,
    pub paths: Vec<BorderPath>,
}

/// Blue and red path families of a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPathSystem {
    pub blue: PathFamily,
    pub red: PathFamily,
}

impl ColoredPathSystem {
    pub fn new(p: &PairRPP) -> Self {
        ColoredPathSystem { blue: paths_of(p.blue()), red: paths_of(p.red()) }
    }
}

/// Number of paths crossing each slice line: `ℓ(λ)` on line 0, dropping by
/// one after every `⪰` strip.
fn line_centers(kinds: &[Relation], ell: usize) -> Vec<i64> {
    let mut c = vec![ell as i64];
    for k in kinds {
        let last = *c.last().unwrap();
        c.push(if *k == Relation::Above { last - 1 } else { last });
    }
    c
}

/// The path family of an RPP.
pub fn paths_of(rpp: &RPP) -> PathFamily {
    let shape = rpp.shape().clone();
    let kinds = interaction_pattern(&shape);
    let slices = to_slices(rpp).slices;
    let centers = line_centers(&kinds, shape.len());
    let paths = border_strips(&shape)
        .into_iter()
        .map(|strip| {
            let i = strip.index;
            let heights = strip.cells.iter().map(|&c| rpp.get(c).expect("strip cell in shape")).collect();
            let positions =
                slices.iter().zip(&centers).map(|(s, &c)| c - i as i64 + s.part(i) as i64).collect();
            BorderPath { index: i, cells: strip.cells, heights, positions }
        })
        .collect();
    PathFamily { shape, kinds, paths }
}

/// A path inside one strip, in quarter-units of the strip's local height:
/// the left contact point, the vertical segment in the middle of the strip
/// and the right contact point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct StripTrace {
    left: i64,
    lo: i64,
    hi: i64,
    right: i64,
}

/// Trace of a path between particle `a` on the left line and particle `b`
/// on the right line. In a `⪯` strip the path climbs from `a` to `b ≥ a`;
/// in a `⪰` strip it descends to `b ≤ a − 1`.
fn trace(kind: Relation, a: i64, b: i64) -> StripTrace {
    match kind {
        Relation::Below => StripTrace { left: 4 * a + 2, lo: 4 * a + 3, hi: 4 * b + 3, right: 4 * b + 4 },
        Relation::Above => StripTrace { left: 4 * a + 2, lo: 4 * b + 5, hi: 4 * a + 1, right: 4 * b + 4 },
    }
}

/// One violated path-order constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintViolation {
    /// Strip (1-based) between slice lines `strip − 1` and `strip`.
    pub strip: usize,
    /// Blue path index.
    pub path: usize,
    /// `"weakly below"` (blue i vs red i) or `"strictly above"` (blue i vs red i+1).
    pub constraint: String,
}

/// All violations of the `t = 0` path-order constraints: blue path `i` lies
/// weakly below red path `i` without sharing a vertical segment, and
/// strictly above red path `i + 1`.
pub fn t0_violations(p: &PairRPP) -> Vec<ConstraintViolation> {
    let sys = ColoredPathSystem::new(p);
    family_violations(&sys.blue, &sys.red)
}

/// [`t0_violations`] on precomputed path families of one shape.
pub fn family_violations(blue: &PathFamily, red: &PathFamily) -> Vec<ConstraintViolation> {
    let kinds = &blue.kinds;
    let m = blue.paths.len();
    let mut out = Vec::new();
    for k in 1..=kinds.len() {
        let tr = |path: &BorderPath| trace(kinds[k - 1], path.positions[k - 1], path.positions[k]);
        for i in 0..m {
            let b = tr(&blue.paths[i]);
            let r = tr(&red.paths[i]);
            if !(b.left <= r.left && b.right <= r.right && b.hi <= r.lo) {
                out.push(ConstraintViolation { strip: k, path: i + 1, constraint: "weakly below".into() });
            }
            if let Some(next) = red.paths.get(i + 1) {
                let r = tr(next);
                if !(b.left > r.left && b.right > r.right && b.lo > r.hi) {
                    out.push(ConstraintViolation { strip: k, path: i + 1, constraint: "strictly above".into() });
                }
            }
        }
    }
    out
}

/// True iff both path-order constraints hold everywhere.
pub fn check_t0_constraints(p: &PairRPP) -> bool {
    t0_violations(p).is_empty()
}

/// Colour tag used in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

/// Cells that must vanish when the constraints hold: in blue strip `i` and
/// red strip `i + 1`, every cell in the first `i` rows or first `i` columns.
/// These are exactly the cells that sliding pushes off the diagram.
pub fn forced_zero_cells(lambda: &Partition) -> Vec<(Color, Cell)> {
    let mut out = Vec::new();
    for c in lambda.cells() {
        let s = strip_index(lambda, c);
        let off = |i: usize| c.row <= i || c.col <= i;
        if off(s) {
            out.push((Color::Blue, c));
        }
        if s >= 2 && off(s - 1) {
            out.push((Color::Red, c));
        }
    }
    out
}

/// Forced-zero cells of a pair that carry a nonzero entry.
pub fn forced_zero_violations(p: &PairRPP) -> Vec<(Color, Cell, u64)> {
    forced_zero_cells(p.shape())
        .into_iter()
        .filter_map(|(col, c)| {
            let v = match col {
                Color::Blue => p.blue().get(c),
                Color::Red => p.red().get(c),
            }
            .unwrap_or(0);
            (v != 0).then_some((col, c, v))
        })
        .collect()
}

/// Merges a non-interacting pair into a single RPP of the same shape.
pub fn slide(p: &PairRPP) -> Result<RPP> {
    if !check_t0_constraints(p) {
        let g = coupled_pairs(&tiling_of(p.blue(), pair_window(p))?, &tiling_of(p.red(), pair_window(p))?).len();
        return Err(Error::NotNonInteracting(g as u64));
    }
    let bad = forced_zero_violations(p);
    if !bad.is_empty() {
        return Err(Error::Internal(format!("constraints hold but forced-zero cells are nonzero: {bad:?}")));
    }
    let lambda = p.shape();
    let out = RPP::from_fn(lambda, |c| {
        let s = strip_index(lambda, c);
        if s % 2 == 1 {
            let i = s.div_ceil(2);
            p.red().get(Cell::new(c.row + i - 1, c.col + i - 1)).expect("source above on the diagonal")
        } else {
            let i = s / 2;
            p.blue().get(Cell::new(c.row + i, c.col + i)).expect("source above on the diagonal")
        }
    })
    .map_err(|e| Error::Internal(format!("slid filling is not an RPP: {e}")))?;
    debug_assert_eq!(out.volume(), p.volume());
    Ok(out)
}

fn pair_window(p: &PairRPP) -> usize {
    crate::coupling::pair_columns(p)
}

/// Splits an RPP into the unique non-interacting pair that slides onto it:
/// odd strips become red, even strips blue, shifted back up their
/// diagonals and zero-extended.
pub fn unslide(rpp: &RPP) -> Result<PairRPP> {
    let lambda = rpp.shape();
    let back = |c: Cell, d: usize| {
        if c.row > d && c.col > d {
            rpp.get(Cell::new(c.row - d, c.col - d)).unwrap_or(0)
        } else {
            0
        }
    };
    let red = RPP::from_fn(lambda, |c| back(c, strip_index(lambda, c) - 1))
        .map_err(|e| Error::Internal(format!("red part is not an RPP: {e}")))?;
    let blue = RPP::from_fn(lambda, |c| back(c, strip_index(lambda, c)))
        .map_err(|e| Error::Internal(format!("blue part is not an RPP: {e}")))?;
    PairRPP::new(blue, red)
}

/// Per-volume comparison of non-interacting pairs with single RPPs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T0Row {
    pub volume: u32,
    /// Pairs with `g = 0`, counted by coupled lozenges.
    pub noninteracting_pairs: u64,
    /// RPPs of the shape, counted by enumeration.
    pub rpps: u64,
    /// `t⁰` coefficient of the pair hook product.
    pub pair_series: u64,
    /// Coefficient of the single hook product.
    pub single_series: u64,
}

/// Report of [`verify_t0_counting`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T0Report {
    pub shape: Partition,
    pub max_volume: u32,
    pub rows: Vec<T0Row>,
    /// Pairs on which the constraint check and `g = 0` disagree.
    pub constraint_mismatches: u64,
    pub holds: bool,
}

/// For each `n ≤ N`: #{pairs with `g = 0`, total volume `n`} against
/// #{RPPs of volume `n`}, both also read off the hook products.
pub fn verify_t0_counting(lambda: &Partition, n_max: u32) -> Result<T0Report> {
    let rpps = enumerate(lambda, n_max as u64);
    let ncols = lambda.len() + n_max as usize + 2;
    let tilings: Vec<_> = rpps.iter().map(|r| tiling_of(r, ncols)).collect::<Result<_>>()?;
    let families: Vec<PathFamily> = rpps.iter().map(paths_of).collect();
    let per_blue: Vec<(Vec<u64>, u64)> = (0..rpps.len())
        .into_par_iter()
        .map(|bi| {
            let mut counts = vec![0u64; n_max as usize + 1];
            let mut mismatches = 0;
            for ri in 0..rpps.len() {
                let v = rpps[bi].volume() + rpps[ri].volume();
                if v > n_max as u64 {
                    continue;
                }
                let g0 = coupled_pairs(&tilings[bi], &tilings[ri]).is_empty();
                if family_violations(&families[bi], &families[ri]).is_empty() != g0 {
                    mismatches += 1;
                }
                if g0 {
                    counts[v as usize] += 1;
                }
            }
            (counts, mismatches)
        })
        .collect();
    let mut pairs = vec![0u64; n_max as usize + 1];
    let mut constraint_mismatches = 0;
    for (c, mm) in per_blue {
        constraint_mismatches += mm;
        for (a, b) in pairs.iter_mut().zip(c) {
            *a += b;
        }
    }
    let singles = count_by_volume(lambda, n_max as u64);
    let pair_series = hook_product_pair(lambda, n_max).slice_at_t_zero();
    let single_series = hook_product_single(lambda, n_max);
    let rows: Vec<T0Row> = (0..=n_max)
        .map(|n| T0Row {
            volume: n,
            noninteracting_pairs: pairs[n as usize],
            rpps: singles[n as usize],
            pair_series: pair_series.coeff_u64(n, 0),
            single_series: single_series.coeff_u64(n, 0),
        })
        .collect();
    let holds = constraint_mismatches == 0
        && rows.iter().all(|r| {
            r.noninteracting_pairs == r.rpps && r.rpps == r.pair_series && r.pair_series == r.single_series
        });
    Ok(T0Report { shape: lambda.clone(), max_volume: n_max, rows, constraint_mismatches, holds })
}

/// Outcome of a round-trip sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTripReport {
    pub rpps_checked: u64,
    pub pairs_checked: u64,
    pub failures: Vec<String>,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `slide ∘ unslide = id` on RPPs of volume `≤ N`, and `unslide ∘ slide = id`
/// on non-interacting pairs of total volume `≤ N`.
pub fn verify_round_trip(lambda: &Partition, n_max: u64) -> RoundTripReport {
    let mut rep = RoundTripReport::default();
    let rpps = enumerate(lambda, n_max);
    for r in &rpps {
        rep.rpps_checked += 1;
        match unslide(r).and_then(|p| slide(&p)) {
            Ok(back) if &back == r => {}
            Ok(back) => rep.failures.push(format!("slide(unslide({r:?})) = {back:?}")),
            Err(e) => rep.failures.push(format!("unslide/slide of {r:?}: {e}")),
        }
    }
    let families: Vec<PathFamily> = rpps.iter().map(paths_of).collect();
    let per_blue: Vec<(u64, Vec<String>)> = rpps
        .par_iter()
        .zip(&families)
        .map(|(b, fb)| {
            let mut checked = 0;
            let mut f = Vec::new();
            for (r, fr) in rpps.iter().zip(&families) {
                if b.volume() + r.volume() > n_max || !family_violations(fb, fr).is_empty() {
                    continue;
                }
                checked += 1;
                let p = PairRPP::new(b.clone(), r.clone()).expect("same shape");
                match slide(&p).and_then(|s| {
                    if s.volume() != p.volume() {
                        return Err(Error::Internal("volume changed".into()));
                    }
                    unslide(&s)
                }) {
                    Ok(back) if back == p => {}
                    Ok(back) => f.push(format!("unslide(slide({p:?})) = {back:?}")),
                    Err(e) => f.push(format!("slide of {p:?}: {e}")),
                }
            }
            (checked, f)
        })
        .collect();
    for (c, f) in per_blue {
        rep.pairs_checked += c;
        rep.failures.extend(f);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::g_via_lozenges;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn shifted_pair() -> PairRPP {
        let s = p(&[4, 4, 3, 3, 1]);
        let blue = RPP::from_rows_top_down(
            s.clone(),
            vec![vec![0], vec![0, 1, 4], vec![0, 0, 2], vec![0, 0, 0, 1], vec![0, 0, 0, 0]],
        )
        .unwrap();
        let red = RPP::from_rows_top_down(
            s,
            vec![vec![3], vec![2, 4, 4], vec![0, 1, 4], vec![0, 0, 2, 4], vec![0, 0, 0, 3]],
        )
        .unwrap();
        PairRPP::new(blue, red).unwrap()
    }

    fn shifted_output() -> RPP {
        RPP::from_rows_top_down(
            p(&[4, 4, 3, 3, 1]),
            vec![vec![3], vec![2, 4, 4], vec![1, 4, 4], vec![1, 2, 2, 4], vec![0, 0, 1, 3]],
        )
        .unwrap()
    }

    #[test]
    fn worked_slide() {
        let pair = shifted_pair();
        assert_eq!(g_via_lozenges(&pair).unwrap(), 0);
        assert!(check_t0_constraints(&pair));
        assert!(forced_zero_violations(&pair).is_empty());
        assert_eq!(slide(&pair).unwrap(), shifted_output());
        assert_eq!(unslide(&shifted_output()).unwrap(), pair);
    }

    #[test]
    fn strip_indices_match_border_strips() {
        for lambda in [p(&[4, 4, 3, 3, 1]), p(&[3, 2, 1]), p(&[2, 2])] {
            for strip in border_strips(&lambda) {
                for c in strip.cells {
                    assert_eq!(strip_index(&lambda, c), strip.index);
                }
            }
        }
    }

    #[test]
    fn worked_paths() {
        let fam = paths_of(&shifted_output());
        assert_eq!(fam.paths.len(), 3);
        assert_eq!(fam.paths[2].cells, vec![Cell::new(2, 1), Cell::new(1, 1)]);
        assert_eq!(fam.paths[2].heights, vec![1, 0]);
        // Zero filling: each path sits at its back-wall position on every line.
        let zero = paths_of(&RPP::zero(&p(&[4, 4, 3, 3, 1])));
        assert!(zero.paths.iter().all(|path| path.heights.iter().all(|&h| h == 0)));
        let one = paths_of(&RPP::new(p(&[1]), vec![vec![5]]).unwrap());
        assert_eq!(one.paths[0].heights, vec![5]);
        assert_eq!(one.paths[0].positions, vec![0, 5, -1]);
    }

    #[test]
    fn interacting_pair_rejected() {
        let s = p(&[3, 2, 1]);
        let blue = RPP::from_rows_top_down(s.clone(), vec![vec![2], vec![1, 3], vec![0, 1, 1]]).unwrap();
        let red = RPP::from_rows_top_down(s, vec![vec![2], vec![1, 2], vec![1, 2, 3]]).unwrap();
        let pair = PairRPP::new(blue, red).unwrap();
        assert!(!check_t0_constraints(&pair));
        assert!(matches!(slide(&pair), Err(Error::NotNonInteracting(6))));
    }

    #[test]
    fn zero_pairs() {
        for lambda in [Partition::empty(), p(&[1]), p(&[3, 1])] {
            let z = PairRPP::zero(&lambda);
            assert!(check_t0_constraints(&z));
            assert_eq!(slide(&z).unwrap(), RPP::zero(&lambda));
            assert_eq!(unslide(&RPP::zero(&lambda)).unwrap(), z);
        }
    }

    #[test]
    fn counting_examples() {
        let r = verify_t0_counting(&p(&[1]), 6).unwrap();
        assert!(r.holds);
        assert!(r.rows.iter().all(|row| row.rpps == 1));
        assert!(verify_t0_counting(&p(&[2, 2]), 8).unwrap().holds);
        assert!(verify_t0_counting(&p(&[3, 1]), 6).unwrap().holds);
    }

    #[test]
    fn round_trips() {
        assert!(verify_round_trip(&p(&[2, 2]), 6).passed());
        assert!(verify_round_trip(&p(&[3, 1]), 6).passed());
    }
}
