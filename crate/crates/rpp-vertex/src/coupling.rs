//! The two-colour vertex model (blue = colour 1, red = colour 2), the
//! interaction statistic `g(Λ, Λ′)` computed by two independent routes, and
//! brute-force pair generating functions.
//!
//! * [`g_via_vertex`] builds the coloured vertex configuration, multiplies
//!   the coloured weights and removes the trivial `t^{ℓ(ℓ−1)/2}`.
//! * [`g_via_lozenges`] never touches weights: it builds each colour's lozenge
//!   tiling from its slices and counts the four coupled-pair patterns.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, Relation};
use crate::qt_series::QTSeries;
use crate::rpp_core::{enumerate, interaction_pattern, to_slices, RPP};
use crate::vertex_model::{
    cross_weight, fill_row, interface_centers, particle_columns, q_specialize, white_exponent, CrossKind, CrossState,
    Monomial, QtMonomial, RowKind, VertexKind, VertexState, Weight, YbeKind,
};

/// A vertex carrying one state per colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredVertexState {
    pub blue: VertexState,
    pub red: VertexState,
}

impl ColoredVertexState {
    pub fn new(blue: VertexState, red: VertexState) -> Self {
        ColoredVertexState { blue, red }
    }

    pub fn from_kinds(blue: VertexKind, red: VertexKind) -> Self {
        ColoredVertexState { blue: blue.state(), red: red.state() }
    }
}

const fn m(x: i64, t: i64) -> Monomial {
    Monomial { x, t }
}

/// Two-colour white weights as printed: rows blue, columns red, both in the
/// order empty, vertical, horizontal, turn-right, left-top.
pub const WHITE2_TABLE: [[Monomial; 5]; 5] = [
    [m(0, 0), m(0, 0), m(1, 0), m(1, 0), m(0, 0)],
    [m(0, 0), m(0, 0), m(1, 0), m(1, 0), m(0, 0)],
    [m(1, 0), m(1, 1), m(2, 1), m(2, 1), m(1, 1)],
    [m(1, 0), m(1, 1), m(2, 1), m(2, 1), m(1, 1)],
    [m(0, 0), m(0, 0), m(1, 0), m(1, 0), m(0, 0)],
];

/// Two-colour gray weights as printed, same layout as [`WHITE2_TABLE`].
pub const GRAY2_TABLE: [[Monomial; 5]; 5] = [
    [m(2, 1), m(2, 1), m(1, 0), m(1, 0), m(2, 1)],
    [m(2, 1), m(2, 1), m(1, 0), m(1, 0), m(2, 1)],
    [m(1, 0), m(1, 1), m(0, 0), m(0, 0), m(1, 1)],
    [m(1, 0), m(1, 1), m(0, 0), m(0, 0), m(1, 1)],
    [m(2, 1), m(2, 1), m(1, 0), m(1, 0), m(2, 1)],
];

fn kind_index(k: VertexKind) -> usize {
    VertexKind::ALL.iter().position(|&a| a == k).expect("listed")
}

/// Coloured white weight by the product formula
/// `L_{x t^δ}(v_b) · L_x(v_r)`, `δ = 1` iff a red path is present.
pub fn colored_white_monomial(s: ColoredVertexState) -> Result<Monomial> {
    let eb = white_exponent(s.blue)?;
    let er = white_exponent(s.red)?;
    let delta = i64::from(s.red.kind()? != VertexKind::Empty);
    Ok(Monomial::new(eb + er, delta * eb))
}

/// The five gray types: 1 empty, 2 turn-right, 3 horizontal, 4 vertical, 5 left-top.
pub fn gray_type(k: VertexKind) -> u8 {
    match k {
        VertexKind::Empty => 1,
        VertexKind::TurnRight => 2,
        VertexKind::Horizontal => 3,
        VertexKind::Vertical => 4,
        VertexKind::LeftTop => 5,
    }
}

/// Coloured gray weight by the per-colour rule: colour `i` of type 1, 4 or 5
/// contributes `x t^{α_i+β_i}`, of type 2 or 3 contributes `t^{β_i}`, where
/// `α_i` counts higher colours of type 1 and `β_i` higher colours of type 4 or 5.
pub fn gray_monomial_colors(states: &[VertexState]) -> Result<Monomial> {
    let types: Vec<u8> = states.iter().map(|s| s.kind().map(gray_type)).collect::<Result<_>>()?;
    let mut w = Monomial::default();
    for (i, &ty) in types.iter().enumerate() {
        let alpha = types[i + 1..].iter().filter(|&&u| u == 1).count() as i64;
        let beta = types[i + 1..].iter().filter(|&&u| u == 4 || u == 5).count() as i64;
        let f = match ty {
            1 | 4 | 5 => Monomial::new(1, alpha + beta),
            _ => Monomial::new(0, beta),
        };
        w = w.times(&f);
    }
    Ok(w)
}

/// Coloured gray weight from the per-colour rule (blue first).
pub fn colored_gray_monomial(s: ColoredVertexState) -> Result<Monomial> {
    gray_monomial_colors(&[s.blue, s.red])
}

/// Coloured vertex monomial for a row kind.
pub fn colored_monomial(kind: RowKind, s: ColoredVertexState) -> Result<Monomial> {
    match kind {
        RowKind::White => colored_white_monomial(s),
        RowKind::Gray => colored_gray_monomial(s),
    }
}

/// Coloured white weight evaluated at exact `x`, `t`.
pub fn colored_white_weight(s: ColoredVertexState, x: &BigRational, t: &BigRational) -> Result<BigRational> {
    Ok(colored_white_monomial(s)?.eval(x, t))
}

/// Coloured gray weight evaluated at exact `x`, `t`.
pub fn colored_gray_weight(s: ColoredVertexState, x: &BigRational, t: &BigRational) -> Result<BigRational> {
    Ok(colored_gray_monomial(s)?.eval(x, t))
}

/// Looks a state up in a printed table.
pub fn table_entry(table: &[[Monomial; 5]; 5], s: ColoredVertexState) -> Result<Monomial> {
    Ok(table[kind_index(s.blue.kind()?)][kind_index(s.red.kind()?)])
}

/// One failed consistency check between printed tables and formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMismatch {
    pub check: String,
    pub blue: VertexKind,
    pub red: VertexKind,
    pub detail: String,
}

/// Checks, for all 25 coloured states and each sample `(x, t)`:
/// the printed white table equals the product formula; the printed gray
/// table equals the per-colour rule; gray equals `x²t · white(1/(xt))`;
/// and at `t = 1` both tables are products of one-colour weights.
pub fn check_colored_tables(samples: &[(BigRational, BigRational)]) -> Vec<TableMismatch> {
    let mut bad = Vec::new();
    let one = BigRational::one();
    for b in VertexKind::ALL {
        for r in VertexKind::ALL {
            let s = ColoredVertexState::from_kinds(b, r);
            let wt = table_entry(&WHITE2_TABLE, s).unwrap();
            let gt = table_entry(&GRAY2_TABLE, s).unwrap();
            let wf = colored_white_monomial(s).unwrap();
            let gf = colored_gray_monomial(s).unwrap();
            let mut push = |check: &str, detail: String| {
                bad.push(TableMismatch { check: check.into(), blue: b, red: r, detail });
            };
            if wt != wf {
                push("white table vs product formula", format!("{wt} vs {wf}"));
            }
            if gt != gf {
                push("gray table vs per-colour rule", format!("{gt} vs {gf}"));
            }
            for (x, t) in samples {
                if gt.eval(x, t) != gf.eval(x, t) {
                    push("gray table vs rule (numeric)", format!("at x={x}, t={t}"));
                }
                let xbar = (x * t).recip();
                let rel = x * x * t * wt.eval(&xbar, t);
                if gt.eval(x, t) != rel {
                    push("gray = x^2 t white(1/(xt))", format!("at x={x}, t={t}: {} vs {rel}", gt.eval(x, t)));
                }
                let w1 = crate::vertex_model::white_weight(b.state(), x).unwrap()
                    * crate::vertex_model::white_weight(r.state(), x).unwrap();
                if wt.eval(x, &one) != w1 {
                    push("white at t=1 factorises", format!("at x={x}"));
                }
                let g1 = crate::vertex_model::gray_weight(b.state(), x).unwrap()
                    * crate::vertex_model::gray_weight(r.state(), x).unwrap();
                if gt.eval(x, &one) != g1 {
                    push("gray at t=1 factorises", format!("at x={x}"));
                }
            }
        }
    }
    bad
}

/// Verifies the printed tables once; the coloured model refuses to run if
/// the printed gray table and its reconstruction disagree.
pub fn verified_tables() -> Result<()> {
    use crate::vertex_model::rat;
    let samples = [(rat(1, 2), rat(2, 5)), (rat(-3, 7), rat(5, 3)), (rat(4, 1), rat(-1, 6))];
    let bad = check_colored_tables(&samples);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!("coloured tables inconsistent: {bad:?}")))
    }
}

/// A crossing carrying one state per colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredCrossState {
    pub blue: CrossState,
    pub red: CrossState,
}

/// `R^{(2)}_{z;t} = R_{z/t^r}(v_b) · R_z(v_r)`, `r = 1` iff red occupies only
/// the NW–SE strand.
pub fn colored_cross_weight(s: ColoredCrossState, z: &BigRational, t: &BigRational) -> Result<BigRational> {
    let r = s.red.kind()? == CrossKind::NwSe;
    let zb = if r { z / t } else { z.clone() };
    Ok(cross_weight(s.blue, &zb)? * cross_weight(s.red, z)?)
}

/// Edge occupation by colour: `(blue, red)`.
pub type EdgePair = (bool, bool);

/// Boundary of a coloured Yang–Baxter configuration (same layout as
/// [`crate::vertex_model::YbeBoundary`], each edge carrying a colour set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredBoundary {
    pub i1: EdgePair,
    pub i2: EdgePair,
    pub i3: EdgePair,
    pub j1: EdgePair,
    pub j2: EdgePair,
    pub j3: EdgePair,
}

impl ColoredBoundary {
    /// All 4096 assignments.
    pub fn all() -> Vec<ColoredBoundary> {
        let e = |v: u32| (v & 2 != 0, v & 1 != 0);
        (0..4096u32)
            .map(|mm| ColoredBoundary {
                i1: e(mm >> 10 & 3),
                i2: e(mm >> 8 & 3),
                i3: e(mm >> 6 & 3),
                j1: e(mm >> 4 & 3),
                j2: e(mm >> 2 & 3),
                j3: e(mm & 3),
            })
            .collect()
    }

    fn color(&self, red: bool) -> crate::vertex_model::YbeBoundary {
        let pick = |e: EdgePair| if red { e.1 } else { e.0 };
        crate::vertex_model::YbeBoundary {
            i1: pick(self.i1),
            i2: pick(self.i2),
            i3: pick(self.i3),
            j1: pick(self.j1),
            j2: pick(self.j2),
            j3: pick(self.j3),
        }
    }
}

fn cvw(kind: RowKind, b: VertexState, r: VertexState, x: &BigRational, t: &BigRational) -> BigRational {
    let s = ColoredVertexState::new(b, r);
    match kind {
        RowKind::White => colored_white_weight(s, x, t),
        RowKind::Gray => colored_gray_weight(s, x, t),
    }
    .unwrap_or_else(|_| BigRational::zero())
}

fn ccw(b: CrossState, r: CrossState, z: &BigRational, t: &BigRational) -> BigRational {
    colored_cross_weight(ColoredCrossState { blue: b, red: r }, z, t).unwrap_or_else(|_| BigRational::zero())
}

/// Both sides of the coloured Yang–Baxter equation for one boundary, with
/// the `x`-row of the kind's colour (gray for [`YbeKind::WhiteGray`]).
pub fn colored_ybe_sides(
    kind: YbeKind,
    bd: ColoredBoundary,
    x: &BigRational,
    y: &BigRational,
    t: &BigRational,
) -> (BigRational, BigRational) {
    colored_ybe_sides_with(kind.x_row(), &kind.z(x, y), bd, x, y, t)
}

/// Both sides of the coloured Yang–Baxter equation with an explicit cross
/// parameter `z` and `x`-row colour `xk`.
pub fn colored_ybe_sides_with(
    xk: RowKind,
    z: &BigRational,
    bd: ColoredBoundary,
    x: &BigRational,
    y: &BigRational,
    t: &BigRational,
) -> (BigRational, BigRational) {
    let z = z.clone();
    let (b, r) = (bd.color(false), bd.color(true));
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    let bits = [false, true];
    for at in 0..4u8 {
        let (atb, atr) = (at & 2 != 0, at & 1 != 0);
        for ab in 0..4u8 {
            let (abb, abr) = (ab & 2 != 0, ab & 1 != 0);
            for mm in 0..4u8 {
                let (mb, mr) = (mm & 2 != 0, mm & 1 != 0);
                let _ = bits;
                // Left side: crossing, then x-vertex below y-vertex.
                let cross = ccw(CrossState::new(b.i1, b.i2, atb, abb), CrossState::new(r.i1, r.i2, atr, abr), &z, t);
                if !cross.is_zero() {
                    let bot = cvw(
                        xk,
                        VertexState::new(b.i3, abb, mb, b.j1),
                        VertexState::new(r.i3, abr, mr, r.j1),
                        x,
                        t,
                    );
                    let top = cvw(
                        RowKind::White,
                        VertexState::new(mb, atb, b.j3, b.j2),
                        VertexState::new(mr, atr, r.j3, r.j2),
                        y,
                        t,
                    );
                    lhs += cross * bot * top;
                }
                // Right side: y-vertex below x-vertex, then crossing.
                let cross = ccw(CrossState::new(atb, abb, b.j2, b.j1), CrossState::new(atr, abr, r.j2, r.j1), &z, t);
                if !cross.is_zero() {
                    let bot = cvw(
                        RowKind::White,
                        VertexState::new(b.i3, b.i2, mb, abb),
                        VertexState::new(r.i3, r.i2, mr, abr),
                        y,
                        t,
                    );
                    let top = cvw(
                        xk,
                        VertexState::new(mb, b.i1, b.j3, atb),
                        VertexState::new(mr, r.i1, r.j3, atr),
                        x,
                        t,
                    );
                    rhs += bot * top * cross;
                }
            }
        }
    }
    (lhs, rhs)
}

/// Which coloured Yang–Baxter equation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColoredYbeMode {
    /// Two white rows, cross parameter `z = y/x`.
    WhiteWhite,
    /// Gray `x`-row, white `y`-row, cross parameter `z = yx` as stated.
    WhiteGray,
    /// Gray `x`-row, white `y`-row, cross parameter `z = yxt`: the value
    /// forced by `gray(x) = x²t · white(1/(xt))`.
    WhiteGrayShifted,
}

impl ColoredYbeMode {
    pub const ALL: [ColoredYbeMode; 3] =
        [ColoredYbeMode::WhiteWhite, ColoredYbeMode::WhiteGray, ColoredYbeMode::WhiteGrayShifted];

    pub fn x_row(self) -> RowKind {
        match self {
            ColoredYbeMode::WhiteWhite => RowKind::White,
            _ => RowKind::Gray,
        }
    }

    pub fn z(self, x: &BigRational, y: &BigRational, t: &BigRational) -> BigRational {
        match self {
            ColoredYbeMode::WhiteWhite => y / x,
            ColoredYbeMode::WhiteGray => y * x,
            ColoredYbeMode::WhiteGrayShifted => y * x * t,
        }
    }
}

/// Checks a coloured YBE over all 4096 boundaries at each `(x, y, t)`.
pub fn verify_colored_ybe_mode(
    mode: ColoredYbeMode,
    samples: &[(BigRational, BigRational, BigRational)],
) -> Result<crate::vertex_model::YbeReport> {
    verified_tables()?;
    let boundaries = ColoredBoundary::all();
    let per_sample: Vec<(usize, Vec<crate::vertex_model::YbeDiscrepancy>)> = samples
        .par_iter()
        .map(|(x, y, t)| {
            let z = mode.z(x, y, t);
            let mut nonzero = 0;
            let mut bad = Vec::new();
            for bd in &boundaries {
                let (l, r) = colored_ybe_sides_with(mode.x_row(), &z, *bd, x, y, t);
                if !l.is_zero() {
                    nonzero += 1;
                }
                if l != r {
                    bad.push(crate::vertex_model::YbeDiscrepancy {
                        boundary: serde_json::to_value(bd).unwrap(),
                        sample: vec![x.to_string(), y.to_string(), t.to_string()],
                        lhs: l.to_string(),
                        rhs: r.to_string(),
                    });
                }
            }
            (nonzero, bad)
        })
        .collect();
    Ok(crate::vertex_model::YbeReport {
        mode: format!("colored {mode:?}"),
        boundaries: boundaries.len(),
        samples: samples.len(),
        nonzero_checks: per_sample.iter().map(|p| p.0).sum(),
        violations: per_sample.into_iter().flat_map(|p| p.1).collect(),
    })
}

/// The coloured white–gray YBE with the stated cross parameter `z = yx`,
/// over all 4096 boundaries. Violations are reported, not hidden: with the
/// printed gray weights this parameter is off by a factor `t` (see
/// [`ColoredYbeMode::WhiteGrayShifted`]).
pub fn verify_colored_ybe(samples: &[(BigRational, BigRational, BigRational)]) -> Result<crate::vertex_model::YbeReport> {
    verify_colored_ybe_mode(ColoredYbeMode::WhiteGray, samples)
}

/// A pair of RPPs of one shape; `blue` is colour 1, `red` colour 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PairJson", into = "PairJson")]
pub struct PairRPP {
    shape: Partition,
    blue: RPP,
    red: RPP,
}

/// Serialised form `{"shape":[...], "blue":{...}, "red":{...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub shape: Partition,
    pub blue: RPP,
    pub red: RPP,
}

impl TryFrom<PairJson> for PairRPP {
    type Error = Error;
    fn try_from(j: PairJson) -> Result<Self> {
        let p = PairRPP::new(j.blue, j.red)?;
        if p.shape != j.shape {
            return Err(Error::PairShapeMismatch(j.shape.parts().to_vec(), p.shape.parts().to_vec()));
        }
        Ok(p)
    }
}

impl From<PairRPP> for PairJson {
    fn from(p: PairRPP) -> Self {
        PairJson { shape: p.shape, blue: p.blue, red: p.red }
    }
}

impl PairRPP {
    pub fn new(blue: RPP, red: RPP) -> Result<Self> {
        if blue.shape() != red.shape() {
            return Err(Error::PairShapeMismatch(blue.shape().parts().to_vec(), red.shape().parts().to_vec()));
        }
        Ok(PairRPP { shape: blue.shape().clone(), blue, red })
    }

    pub fn zero(shape: &Partition) -> Self {
        PairRPP { shape: shape.clone(), blue: RPP::zero(shape), red: RPP::zero(shape) }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
    pub fn blue(&self) -> &RPP {
        &self.blue
    }
    pub fn red(&self) -> &RPP {
        &self.red
    }
    pub fn volume(&self) -> u64 {
        self.blue.volume() + self.red.volume()
    }
}

/// The coloured vertex configuration of a pair: a shared row sequence and
/// one state per colour at each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredConfig {
    pub shape: Partition,
    pub kinds: Vec<RowKind>,
    pub ncols: usize,
    pub states: Vec<Vec<ColoredVertexState>>,
}

impl ColoredConfig {
    /// Per-row weight `x_k^a t^b`.
    pub fn row_monomials(&self) -> Vec<Monomial> {
        self.kinds
            .iter()
            .zip(&self.states)
            .map(|(&k, row)| {
                row.iter().fold(Monomial::default(), |acc, &s| acc.times(&colored_monomial(k, s).expect("allowed")))
            })
            .collect()
    }

    /// Weight under `x_k = q^{±k}`.
    pub fn weight_qt(&self) -> QtMonomial {
        let mons = self.row_monomials();
        let xs: Vec<i64> = mons.iter().map(|m| m.x).collect();
        QtMonomial::new(q_specialize(&self.kinds, &xs), mons.iter().map(|m| m.t).sum())
    }
}

fn color_rows(rpp: &RPP, kinds: &[RowKind], ncols: usize) -> Result<Vec<Vec<VertexState>>> {
    let slices = to_slices(rpp).slices;
    let centers = interface_centers(rpp.shape(), kinds);
    kinds
        .iter()
        .enumerate()
        .map(|(k, &kind)| {
            let bottom = particle_columns(&slices[k], centers[k])?;
            let top = particle_columns(&slices[k + 1], centers[k + 1])?;
            fill_row(kind, &bottom, &top, ncols)?.ok_or_else(|| Error::Internal(format!("row {} has no filling", k + 1)))
        })
        .collect()
}

/// Weight `x^a t^b` of one two-colour row whose bottom interface carries
/// `ell` paths of each colour: blue goes `mu_b → lambda_b`, red
/// `mu_r → lambda_r`. `None` when either colour admits no filling.
pub fn pair_row_weight(
    kind: RowKind,
    blue: (&Partition, &Partition),
    red: (&Partition, &Partition),
    ell: usize,
    ncols: usize,
) -> Result<Option<Monomial>> {
    let top = match kind {
        RowKind::White => ell,
        RowKind::Gray => ell.checked_sub(1).ok_or_else(|| Error::InvalidRow("gray row needs a path".into()))?,
    };
    let fill = |(mu, lam): (&Partition, &Partition)| -> Result<Option<Vec<VertexState>>> {
        fill_row(kind, &particle_columns(mu, ell)?, &particle_columns(lam, top)?, ncols)
    };
    let (Some(b), Some(r)) = (fill(blue)?, fill(red)?) else {
        return Ok(None);
    };
    b.into_iter()
        .zip(r)
        .try_fold(Monomial::default(), |acc, (b, r)| {
            Ok(acc.times(&colored_monomial(kind, ColoredVertexState::new(b, r))?))
        })
        .map(Some)
}

/// Builds the coloured configuration of a pair.
pub fn pair_config(p: &PairRPP) -> Result<ColoredConfig> {
    verified_tables()?;
    let shape = p.shape().clone();
    let kinds: Vec<RowKind> = interaction_pattern(&shape).into_iter().map(RowKind::from_relation).collect();
    let ncols = crate::vertex_model::config_columns(&shape, p.blue.max_entry().max(p.red.max_entry()));
    let blue = color_rows(&p.blue, &kinds, ncols)?;
    let red = color_rows(&p.red, &kinds, ncols)?;
    let states = blue
        .into_iter()
        .zip(red)
        .map(|(b, r)| b.into_iter().zip(r).map(|(b, r)| ColoredVertexState::new(b, r)).collect())
        .collect();
    Ok(ColoredConfig { shape, kinds, ncols, states })
}

/// `w(𝒞)` of a pair under `x_k = q^{±k}`.
pub fn pair_config_weight(p: &PairRPP) -> Result<QtMonomial> {
    Ok(pair_config(p)?.weight_qt())
}

/// `ℓ(ℓ−1)/2`, the t-degree every configuration of the shape carries.
pub fn trivial_t_degree(lambda: &Partition) -> i64 {
    let l = lambda.len() as i64;
    l * (l - 1) / 2
}

/// `A_λ(q;t) = A_λ(q)² t^{−ℓ(ℓ−1)/2}`.
pub fn a_lambda_qt(lambda: &Partition) -> QtMonomial {
    QtMonomial::new(2 * crate::vertex_model::a_lambda_exponent(lambda), -trivial_t_degree(lambda))
}

/// `g` as the t-degree of the coloured weight minus the trivial part.
pub fn g_via_vertex(p: &PairRPP) -> Result<u64> {
    let w = pair_config_weight(p)?;
    let g = w.t - trivial_t_degree(p.shape());
    if g < 0 {
        return Err(Error::Internal(format!("negative interaction degree {g}")));
    }
    Ok(g as u64)
}

/// Lozenges of one colour inside one strip between consecutive slice lines.
///
/// On each slice line, unit segments sit at the vertex columns; a segment is
/// the vertical diagonal of a flat lozenge at a particle and an edge of an
/// inclined lozenge at a hole. Inside strip `k`, the `m`-th hole of line
/// `k − 1` and the `m`-th hole of line `k` bound one inclined lozenge: a
/// rising one (left hole at column `j`, right hole at `j`) or a falling one
/// (left hole at `j + 1`, right hole at `j`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripLozenges {
    /// Columns `j` of rising lozenges (left `j`, right `j`).
    pub rising: Vec<usize>,
    /// Right-hand columns `j` of falling lozenges (left `j + 1`, right `j`).
    pub falling: Vec<usize>,
    /// Particle columns on the right-hand line (flat lozenges poking in).
    pub right_flat: Vec<usize>,
    /// Particle columns on the left-hand line.
    pub left_flat: Vec<usize>,
}

/// A single-colour lozenge tiling on a finite window, strip by strip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub shape: Partition,
    pub ncols: usize,
    /// Strip kinds (`⪯` strips are white, `⪰` strips gray).
    pub kinds: Vec<Relation>,
    pub strips: Vec<StripLozenges>,
}

/// Particle columns on every slice line, computed from the Maya diagram of
/// each slice (`paths` particles packed against the left edge, shifted by
/// the parts).
fn line_particles(rpp: &RPP) -> Vec<Vec<usize>> {
    let shape = rpp.shape();
    let slices = to_slices(rpp).slices;
    let pattern = interaction_pattern(shape);
    let mut paths = shape.len();
    let mut out = Vec::with_capacity(slices.len());
    for (k, s) in slices.iter().enumerate() {
        if k > 0 && pattern[k - 1] == Relation::Above {
            paths -= 1;
        }
        let cols: Vec<usize> = (1..=paths).map(|i| paths - i + s.part(i)).collect();
        out.push(cols);
    }
    out
}

/// Builds the tiling of an RPP on columns `0..ncols`.
pub fn tiling_of(rpp: &RPP, ncols: usize) -> Result<Tiling> {
    let lines = line_particles(rpp);
    let kinds = interaction_pattern(rpp.shape());
    let mut strips = Vec::with_capacity(kinds.len());
    for k in 1..lines.len() {
        let is_particle = |line: usize, j: usize| lines[line].contains(&j);
        if lines[k - 1].iter().chain(&lines[k]).any(|&c| c + 1 >= ncols) {
            return Err(Error::WindowTooNarrow { half_width: ncols, needed: ncols + 1 });
        }
        let left_holes: Vec<usize> = (0..ncols).filter(|&j| !is_particle(k - 1, j)).collect();
        let right_holes: Vec<usize> = (0..ncols).filter(|&j| !is_particle(k, j)).collect();
        let mut rising = Vec::new();
        let mut falling = Vec::new();
        for (&a, &b) in left_holes.iter().zip(&right_holes) {
            if a == b {
                rising.push(b);
            } else if a == b + 1 {
                falling.push(b);
            } else {
                return Err(Error::Internal(format!("strip {k}: holes {a} and {b} cannot share a lozenge")));
            }
        }
        // Unpaired holes at the window edge belong to the constant tail.
        let tail_ok = match kinds[k - 1] {
            Relation::Below => left_holes.len() == right_holes.len(),
            Relation::Above => right_holes.len() == left_holes.len() + 1 && right_holes.last() == Some(&(ncols - 1)),
        };
        if !tail_ok {
            return Err(Error::Internal(format!("strip {k}: tail of the tiling is not constant")));
        }
        strips.push(StripLozenges { rising, falling, right_flat: lines[k].clone(), left_flat: lines[k - 1].clone() });
    }
    Ok(Tiling { shape: rpp.shape().clone(), ncols, kinds, strips })
}

/// Where a coupled pair sits: strip `k` (1-based), column `j`, pattern type 1–4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoupledPair {
    pub strip: usize,
    pub column: usize,
    pub kind: u8,
}

/// Coupled pairs of two superimposed tilings. In a `⪯` strip: a blue falling
/// lozenge under a red flat lozenge on the right line (type 1) or under a
/// red falling lozenge (type 2). In a `⪰` strip: blue and red rising
/// lozenges together (type 3), or a red rising lozenge under a blue flat
/// lozenge on the right line (type 4).
pub fn coupled_pairs(blue: &Tiling, red: &Tiling) -> Vec<CoupledPair> {
    let mut out = Vec::new();
    for (idx, (sb, sr)) in blue.strips.iter().zip(&red.strips).enumerate() {
        let k = idx + 1;
        match blue.kinds[idx] {
            Relation::Below => {
                for &j in &sb.falling {
                    if sr.right_flat.contains(&j) {
                        out.push(CoupledPair { strip: k, column: j, kind: 1 });
                    }
                    if sr.falling.contains(&j) {
                        out.push(CoupledPair { strip: k, column: j, kind: 2 });
                    }
                }
            }
            Relation::Above => {
                for &j in &sr.rising {
                    if sb.rising.contains(&j) {
                        out.push(CoupledPair { strip: k, column: j, kind: 3 });
                    }
                    if sb.right_flat.contains(&j) {
                        out.push(CoupledPair { strip: k, column: j, kind: 4 });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Shared window width for a pair's tilings.
pub fn pair_columns(p: &PairRPP) -> usize {
    p.shape().len() + p.blue().max_entry().max(p.red().max_entry()) as usize + 2
}

/// The coupled pairs of a pair of RPPs.
pub fn coupled_pairs_of(p: &PairRPP) -> Result<Vec<CoupledPair>> {
    let n = pair_columns(p);
    Ok(coupled_pairs(&tiling_of(p.blue(), n)?, &tiling_of(p.red(), n)?))
}

/// `g` as the number of coupled lozenge pairs.
pub fn g_via_lozenges(p: &PairRPP) -> Result<u64> {
    Ok(coupled_pairs_of(p)?.len() as u64)
}

/// `Σ q^{|Λ|+|Λ′|} t^{g}` over all pairs of shape `λ` with total volume at
/// most `n_max`, `g` counted by lozenges. Parallel over the blue RPP.
pub fn pair_genfun_bruteforce(lambda: &Partition, n_max: u32) -> Result<QTSeries> {
    let rpps = enumerate(lambda, n_max as u64);
    let ncols = lambda.len() + n_max as usize + 2;
    let tilings: Vec<(u64, Tiling)> =
        rpps.iter().map(|r| Ok((r.volume(), tiling_of(r, ncols)?))).collect::<Result<_>>()?;
    let partial: Vec<QTSeries> = tilings
        .par_iter()
        .map(|(vb, tb)| {
            let mut s = QTSeries::zero(n_max);
            for (vr, tr) in &tilings {
                if vb + vr <= n_max as u64 {
                    let g = coupled_pairs(tb, tr).len() as u32;
                    s.add_term((vb + vr) as u32, g, 1u32);
                }
            }
            s
        })
        .collect();
    let mut total = QTSeries::zero(n_max);
    for s in &partial {
        total = total.add(s)?;
    }
    Ok(total)
}

/// All pairs of shape `λ` with total volume at most `n_max`.
pub fn enumerate_pairs(lambda: &Partition, n_max: u64) -> Vec<PairRPP> {
    let rpps = enumerate(lambda, n_max);
    let mut out = Vec::new();
    for b in &rpps {
        for r in &rpps {
            if b.volume() + r.volume() <= n_max {
                out.push(PairRPP { shape: lambda.clone(), blue: b.clone(), red: r.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_model::{rat, verify_ybe, ybe_sides};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    pub(crate) fn ex_2color() -> PairRPP {
        let s = p(&[3, 2, 1]);
        let blue = RPP::from_rows_top_down(s.clone(), vec![vec![2], vec![1, 3], vec![0, 1, 1]]).unwrap();
        let red = RPP::from_rows_top_down(s, vec![vec![2], vec![1, 2], vec![1, 2, 3]]).unwrap();
        PairRPP::new(blue, red).unwrap()
    }

    #[test]
    fn tables_consistent() {
        assert!(verified_tables().is_ok());
        let s = ColoredVertexState::from_kinds(VertexKind::Horizontal, VertexKind::Horizontal);
        assert_eq!(colored_white_monomial(s).unwrap(), Monomial::new(2, 1));
        assert_eq!(colored_gray_monomial(s).unwrap(), Monomial::new(0, 0));
        let e = ColoredVertexState::from_kinds(VertexKind::Empty, VertexKind::Empty);
        assert_eq!(colored_white_monomial(e).unwrap(), Monomial::new(0, 0));
        assert_eq!(colored_gray_monomial(e).unwrap(), Monomial::new(2, 1));
    }

    #[test]
    fn colored_cross_examples() {
        let z = rat(2, 7);
        let t = rat(3, 5);
        let empty = CrossKind::Empty.state();
        let nwse = CrossKind::NwSe.state();
        let s = ColoredCrossState { blue: empty, red: empty };
        assert_eq!(colored_cross_weight(s, &z, &t).unwrap(), BigRational::one());
        let s = ColoredCrossState { blue: empty, red: nwse };
        assert_eq!(colored_cross_weight(s, &z, &t).unwrap(), BigRational::one() - &z);
        let s = ColoredCrossState { blue: nwse, red: nwse };
        assert_eq!(
            colored_cross_weight(s, &z, &t).unwrap(),
            (BigRational::one() - &z / &t) * (BigRational::one() - &z)
        );
    }

    /// The worked white–white identity, built from the local weights.
    #[test]
    fn worked_identity() {
        let (x, y, t) = (rat(3, 4), rat(1, 5), rat(2, 3));
        let z = &y / &x;
        let k = |v: VertexKind| v.state();
        let c = |v: CrossKind| v.state();
        let lhs = colored_cross_weight(ColoredCrossState { blue: c(CrossKind::NwSe), red: c(CrossKind::Empty) }, &z, &t)
            .unwrap()
            * colored_white_weight(ColoredVertexState::new(k(VertexKind::Horizontal), k(VertexKind::TurnRight)), &x, &t)
                .unwrap();
        let r1 = colored_white_weight(ColoredVertexState::new(k(VertexKind::Empty), k(VertexKind::TurnRight)), &y, &t)
            .unwrap()
            * colored_white_weight(ColoredVertexState::new(k(VertexKind::Horizontal), k(VertexKind::Empty)), &x, &t)
                .unwrap()
            * colored_cross_weight(
                ColoredCrossState { blue: c(CrossKind::NwSe), red: c(CrossKind::BottomBottom) },
                &z,
                &t,
            )
            .unwrap();
        let r2 = colored_white_weight(ColoredVertexState::new(k(VertexKind::Empty), k(VertexKind::Vertical)), &y, &t)
            .unwrap()
            * colored_white_weight(ColoredVertexState::new(k(VertexKind::Horizontal), k(VertexKind::TurnRight)), &x, &t)
                .unwrap()
            * colored_cross_weight(ColoredCrossState { blue: c(CrossKind::NwSe), red: c(CrossKind::NwSe) }, &z, &t)
                .unwrap();
        let one = BigRational::one();
        assert_eq!(lhs, &x * &x * &t * (&one - &y / &x));
        assert_eq!(r1, &x * &y * (&one - &y / &x));
        assert_eq!(r2, &x * &x * &t * (&one - &y / &x) * (&one - &y / (&x * &t)));
        assert_eq!(lhs, r1 + r2);
    }

    #[test]
    fn colored_ybe_t_one_factorises() {
        let (x, y) = (rat(1, 2), rat(1, 3));
        let t = BigRational::one();
        for bd in ColoredBoundary::all().into_iter().step_by(7) {
            let (l, r) = colored_ybe_sides(YbeKind::WhiteGray, bd, &x, &y, &t);
            let (lb, _) = ybe_sides(YbeKind::WhiteGray, bd.color(false), &x, &y);
            let (lr, _) = ybe_sides(YbeKind::WhiteGray, bd.color(true), &x, &y);
            assert_eq!(l, &lb * &lr);
            assert_eq!(r, lb * lr);
        }
        assert!(verify_ybe(YbeKind::WhiteGray, &[(x, y)]).passed());
    }

    #[test]
    fn colored_ybe_sweeps() {
        let s = [(rat(1, 2), rat(1, 3), rat(2, 5))];
        assert!(verify_colored_ybe_mode(ColoredYbeMode::WhiteWhite, &s).unwrap().passed());
        assert!(verify_colored_ybe_mode(ColoredYbeMode::WhiteGrayShifted, &s).unwrap().passed());
        let stated = verify_colored_ybe(&s).unwrap();
        assert_eq!(stated.violations.len(), 135);
    }

    /// Red-only boundary: red enters at the bottom and leaves top-right.
    /// Left side x²t·y, right side x·z; equal only for z = yxt.
    #[test]
    fn colored_ybe_red_only_boundary() {
        let (x, y, t) = (rat(1, 2), rat(1, 3), rat(2, 5));
        let e = (false, false);
        let red = (false, true);
        let bd = ColoredBoundary { i1: e, i2: e, i3: red, j1: e, j2: red, j3: e };
        let (l, r) = colored_ybe_sides(YbeKind::WhiteGray, bd, &x, &y, &t);
        assert_eq!(l, &x * &x * &t * &y);
        assert_eq!(r, &x * &x * &y);
        let z = &x * &y * &t;
        let (l, r) = colored_ybe_sides_with(RowKind::Gray, &z, bd, &x, &y, &t);
        assert_eq!(l, r);
    }

    #[test]
    fn worked_pair() {
        let pair = ex_2color();
        assert_eq!(pair.blue().volume(), 8);
        assert_eq!(pair.red().volume(), 11);
        assert_eq!(g_via_lozenges(&pair).unwrap(), 6);
        assert_eq!(g_via_vertex(&pair).unwrap(), 6);
        let w = pair_config_weight(&pair).unwrap();
        assert_eq!(w.times(&a_lambda_qt(pair.shape())), QtMonomial::new(19, 6));
    }

    #[test]
    fn trivial_pairs() {
        let z = PairRPP::zero(&p(&[1]));
        assert_eq!(g_via_vertex(&z).unwrap(), 0);
        assert_eq!(g_via_lozenges(&z).unwrap(), 0);
        let e = PairRPP::zero(&Partition::empty());
        assert_eq!(pair_config_weight(&e).unwrap(), QtMonomial::new(0, 0));
    }

    #[test]
    fn pair_genfun_examples() {
        use crate::qt_series::hook_product_pair;
        assert_eq!(pair_genfun_bruteforce(&Partition::empty(), 5).unwrap(), QTSeries::one(5));
        let s = pair_genfun_bruteforce(&p(&[1]), 2).unwrap();
        assert_eq!(s, hook_product_pair(&p(&[1]), 2));
        assert_eq!(pair_genfun_bruteforce(&p(&[2, 1]), 6).unwrap(), hook_product_pair(&p(&[2, 1]), 6));
    }

    #[test]
    fn pair_json() {
        let pair = ex_2color();
        let j = serde_json::to_string(&pair).unwrap();
        assert_eq!(serde_json::from_str::<PairRPP>(&j).unwrap(), pair);
        let bad = r#"{"shape":[1],"blue":{"shape":[1],"rows":[[0]]},"red":{"shape":[2],"rows":[[0,0]]}}"#;
        assert!(serde_json::from_str::<PairRPP>(bad).is_err());
    }

    #[test]
    fn worked_rows() {
        let w = pair_row_weight(RowKind::White, (&p(&[2, 1]), &p(&[4, 2])), (&p(&[1]), &p(&[4, 1])), 2, 9);
        assert_eq!(w.unwrap(), Some(Monomial::new(7, 3)));
        let g = pair_row_weight(RowKind::Gray, (&p(&[3, 1, 1]), &p(&[1, 1])), (&p(&[2, 1]), &p(&[1, 1])), 3, 10);
        assert_eq!(g.unwrap(), Some(Monomial::new(8, 3)));
        let none = pair_row_weight(RowKind::White, (&p(&[2]), &p(&[1])), (&p(&[1]), &p(&[1])), 2, 9);
        assert_eq!(none.unwrap(), None);
    }
}
