//! The one-colour five-vertex model: white, gray and cross weights, row
//! weights, Yang–Baxter and commutation checks, and the map sending an RPP
//! to a vertex configuration.
//!
//! Geometry. Vertex columns are numbered `0, 1, …` from the fixed left
//! boundary of the domain. An interface with centre `c` carrying `p = c`
//! paths has path `i` (1-based) at column `c − i + μ_i`. A white row keeps
//! the centre and its paths move weakly right; a gray row moves the centre
//! one column left, takes its top path `i` from bottom path `i + 1`, and
//! sends bottom path 1 out through the right edge forever.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{interlaces, Partition, Relation};
use crate::rpp_core::{interaction_pattern, to_slices, RPP};

/// Exact weight values: big rationals or Laurent monomials.
pub trait Weight: Clone + PartialEq + fmt::Debug {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn power(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::unit();
        for _ in 0..e.unsigned_abs() {
            acc = acc.times(&base);
        }
        acc
    }
}

impl Weight for BigRational {
    fn unit() -> Self {
        One::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
}

/// A Laurent monomial `x^x t^t` used for symbolic vertex weights.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x: i64,
    pub t: i64,
}

impl Monomial {
    pub const X: Monomial = Monomial { x: 1, t: 0 };
    pub const T: Monomial = Monomial { x: 0, t: 1 };

    pub fn new(x: i64, t: i64) -> Self {
        Monomial { x, t }
    }

    /// Evaluates at exact `x`, `t`.
    pub fn eval(&self, x: &BigRational, t: &BigRational) -> BigRational {
        x.power(self.x).times(&t.power(self.t))
    }
}

impl Weight for Monomial {
    fn unit() -> Self {
        Monomial::default()
    }
    fn times(&self, o: &Self) -> Self {
        Monomial { x: self.x + o.x, t: self.t + o.t }
    }
    fn inverse(&self) -> Self {
        Monomial { x: -self.x, t: -self.t }
    }
    fn power(&self, e: i64) -> Self {
        Monomial { x: self.x * e, t: self.t * e }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("t", self.t)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A Laurent monomial `q^q t^t`, the result of the `q`-specialisation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QtMonomial {
    pub q: i64,
    pub t: i64,
}

impl QtMonomial {
    pub fn new(q: i64, t: i64) -> Self {
        QtMonomial { q, t }
    }
    pub fn times(&self, o: &QtMonomial) -> QtMonomial {
        QtMonomial { q: self.q + o.q, t: self.t + o.t }
    }
}

impl fmt::Display for QtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} t^{}", self.q, self.t)
    }
}

/// Parses an exact rational such as `2/3` or `-5`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::BadInput(format!("not a rational: {s}")))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The five allowed vertex states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    Empty,
    /// Enters from the bottom, exits at the top.
    Vertical,
    /// Enters from the left, exits on the right.
    Horizontal,
    /// Enters from the bottom, exits on the right.
    TurnRight,
    /// Enters from the left, exits at the top.
    LeftTop,
}

impl VertexKind {
    /// All five, in table order (empty, vertical, horizontal, turn-right, left-top).
    pub const ALL: [VertexKind; 5] =
        [VertexKind::Empty, VertexKind::Vertical, VertexKind::Horizontal, VertexKind::TurnRight, VertexKind::LeftTop];

    pub fn state(self) -> VertexState {
        let (b, l, t, r) = match self {
            VertexKind::Empty => (false, false, false, false),
            VertexKind::Vertical => (true, false, true, false),
            VertexKind::Horizontal => (false, true, false, true),
            VertexKind::TurnRight => (true, false, false, true),
            VertexKind::LeftTop => (false, true, true, false),
        };
        VertexState { in_bottom: b, in_left: l, out_top: t, out_right: r }
    }
}

/// Occupation of the four edges around a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexState {
    pub in_bottom: bool,
    pub in_left: bool,
    pub out_top: bool,
    pub out_right: bool,
}

impl VertexState {
    pub fn new(in_bottom: bool, in_left: bool, out_top: bool, out_right: bool) -> Self {
        VertexState { in_bottom, in_left, out_top, out_right }
    }

    /// The allowed kind, or an error for the eleven forbidden edge patterns.
    pub fn kind(&self) -> Result<VertexKind> {
        match (self.in_bottom, self.in_left, self.out_top, self.out_right) {
            (false, false, false, false) => Ok(VertexKind::Empty),
            (true, false, true, false) => Ok(VertexKind::Vertical),
            (false, true, false, true) => Ok(VertexKind::Horizontal),
            (true, false, false, true) => Ok(VertexKind::TurnRight),
            (false, true, true, false) => Ok(VertexKind::LeftTop),
            _ => Err(Error::DisallowedState(format!("{self:?}"))),
        }
    }
}

/// White (`⪯`) or gray (`⪰`) row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowKind {
    White,
    Gray,
}

impl RowKind {
    pub fn from_relation(r: Relation) -> Self {
        match r {
            Relation::Below => RowKind::White,
            Relation::Above => RowKind::Gray,
        }
    }
}

/// Exponent of `x` in the white weight: 1 iff the path exits right.
pub fn white_exponent(v: VertexState) -> Result<i64> {
    v.kind()?;
    Ok(i64::from(v.out_right))
}

/// Exponent of `x` in the gray weight: 1 iff no path exits right.
pub fn gray_exponent(v: VertexState) -> Result<i64> {
    Ok(1 - white_exponent(v)?)
}

/// Exponent of `x` for a vertex of the given row kind.
pub fn vertex_exponent(kind: RowKind, v: VertexState) -> Result<i64> {
    match kind {
        RowKind::White => white_exponent(v),
        RowKind::Gray => gray_exponent(v),
    }
}

/// White vertex weight `L_x(v)`.
pub fn white_weight<W: Weight>(v: VertexState, x: &W) -> Result<W> {
    Ok(x.power(white_exponent(v)?))
}

/// Gray vertex weight `L′_x(v)`.
pub fn gray_weight<W: Weight>(v: VertexState, x: &W) -> Result<W> {
    Ok(x.power(gray_exponent(v)?))
}

/// Occupation of a crossing: inputs on the left (top, bottom), outputs on
/// the right (top, bottom). The NW–SE strand joins top-left to bottom-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossState {
    pub in_top: bool,
    pub in_bottom: bool,
    pub out_top: bool,
    pub out_bottom: bool,
}

/// The five allowed crossings, in weight-table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossKind {
    /// Only the NW–SE strand occupied: weight `1 − z`.
    NwSe,
    /// Path enters top-left and leaves top-right: weight `z`.
    TopTop,
    /// Path enters bottom-left and leaves bottom-right: weight `1`.
    BottomBottom,
    /// Both strands occupied: weight `z`.
    Both,
    /// Empty: weight `1`.
    Empty,
}

impl CrossKind {
    pub const ALL: [CrossKind; 5] =
        [CrossKind::NwSe, CrossKind::TopTop, CrossKind::BottomBottom, CrossKind::Both, CrossKind::Empty];

    pub fn state(self) -> CrossState {
        let (a, b, c, d) = match self {
            CrossKind::NwSe => (true, false, false, true),
            CrossKind::TopTop => (true, false, true, false),
            CrossKind::BottomBottom => (false, true, false, true),
            CrossKind::Both => (true, true, true, true),
            CrossKind::Empty => (false, false, false, false),
        };
        CrossState { in_top: a, in_bottom: b, out_top: c, out_bottom: d }
    }
}

impl CrossState {
    pub fn new(in_top: bool, in_bottom: bool, out_top: bool, out_bottom: bool) -> Self {
        CrossState { in_top, in_bottom, out_top, out_bottom }
    }

    pub fn kind(&self) -> Result<CrossKind> {
        CrossKind::ALL
            .into_iter()
            .find(|k| k.state() == *self)
            .ok_or_else(|| Error::DisallowedState(format!("crossing {self:?}")))
    }
}

/// Cross weight `R_z(v)`.
pub fn cross_weight(v: CrossState, z: &BigRational) -> Result<BigRational> {
    Ok(match v.kind()? {
        CrossKind::NwSe => BigRational::one() - z,
        CrossKind::TopTop | CrossKind::Both => z.clone(),
        CrossKind::BottomBottom | CrossKind::Empty => BigRational::one(),
    })
}

/// Column positions of the `paths` particles of `μ` for an interface with
/// centre `center` (= `paths`).
pub fn particle_columns(mu: &Partition, paths: usize) -> Result<Vec<usize>> {
    if mu.len() > paths {
        return Err(Error::InvalidRow(format!("{mu} has more than {paths} parts")));
    }
    Ok((1..=paths).map(|i| paths - i + mu.part(i)).collect())
}

/// The unique filling of one row between bottom and top particle sets, on
/// columns `0..ncols`, or `None` when no valid configuration exists.
///
/// No path enters from the left; a white row has no right exit, a gray row
/// exactly one. Errors when the window cannot show the constant tail.
pub fn fill_row(kind: RowKind, bottom: &[usize], top: &[usize], ncols: usize) -> Result<Option<Vec<VertexState>>> {
    if bottom.iter().chain(top).any(|&c| c >= ncols) {
        return Err(Error::WindowTooNarrow { half_width: ncols, needed: bottom.iter().chain(top).max().unwrap() + 1 });
    }
    let mut b = vec![false; ncols];
    let mut t = vec![false; ncols];
    for &c in bottom {
        b[c] = true;
    }
    for &c in top {
        t[c] = true;
    }
    let mut carry = false;
    let mut states = Vec::with_capacity(ncols);
    for j in 0..ncols {
        let (in_bottom, in_left) = (b[j], carry);
        if in_bottom && in_left {
            return Ok(None);
        }
        let present = in_bottom || in_left;
        let out_top = t[j];
        if out_top && !present {
            return Ok(None);
        }
        let out_right = present && !out_top;
        carry = out_right;
        states.push(VertexState::new(in_bottom, in_left, out_top, out_right));
    }
    let tail_ok = match kind {
        RowKind::White => !carry,
        RowKind::Gray => carry,
    };
    if !tail_ok {
        return Ok(None);
    }
    // The last column must already be the weight-1 tail vertex.
    let last = states.last().map(|s| s.kind()).transpose()?;
    let tail = match kind {
        RowKind::White => VertexKind::Empty,
        RowKind::Gray => VertexKind::Horizontal,
    };
    if ncols > 0 && last != Some(tail) {
        return Err(Error::WindowTooNarrow { half_width: ncols, needed: ncols + 1 });
    }
    Ok(Some(states))
}

/// Row data: kind, spectral parameter, paths exiting the top (`ell`,
/// the columns left of the top centre) and columns right of the top centre.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSpec<W> {
    pub kind: RowKind,
    pub x: W,
    pub ell: usize,
    pub window: usize,
}

impl<W: Weight> RowSpec<W> {
    /// Paths entering from the bottom.
    pub fn bottom_paths(&self) -> usize {
        match self.kind {
            RowKind::White => self.ell,
            RowKind::Gray => self.ell + 1,
        }
    }
}

/// Closed-form row weight: white `x^{|λ|−|μ|}` iff `μ ⪯ λ`; gray
/// `x^{|μ|−|λ|+ℓ}` iff `λ ⪯ μ`. `None` when no configuration exists
/// (including when a boundary has more parts than paths).
pub fn row_weight_closed<W: Weight>(kind: RowKind, mu: &Partition, lambda: &Partition, x: &W, ell: usize) -> Option<W> {
    match kind {
        RowKind::White => {
            if lambda.len() > ell || !interlaces(mu, lambda) {
                return None;
            }
            Some(x.power(lambda.size() as i64 - mu.size() as i64))
        }
        RowKind::Gray => {
            if lambda.len() > ell || mu.len() > ell + 1 || !interlaces(lambda, mu) {
                return None;
            }
            Some(x.power(mu.size() as i64 - lambda.size() as i64 + ell as i64))
        }
    }
}

/// Row weight as the product of vertex weights over the explicit filling.
pub fn row_weight_explicit<W: Weight>(spec: &RowSpec<W>, mu: &Partition, lambda: &Partition) -> Result<Option<W>> {
    if mu.len() > spec.bottom_paths() || lambda.len() > spec.ell {
        return Ok(None);
    }
    let bottom = particle_columns(mu, spec.bottom_paths())?;
    let top = particle_columns(lambda, spec.ell)?;
    let ncols = spec.ell + spec.window;
    let Some(states) = fill_row(spec.kind, &bottom, &top, ncols)? else {
        return Ok(None);
    };
    let mut w = W::unit();
    for s in states {
        let v = match spec.kind {
            RowKind::White => white_weight(s, &spec.x)?,
            RowKind::Gray => gray_weight(s, &spec.x)?,
        };
        w = w.times(&v);
    }
    Ok(Some(w))
}

/// A one-colour vertex configuration on a finite window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexConfig {
    pub shape: Partition,
    /// Row kinds, bottom-up (row `k` is index `k − 1`).
    pub kinds: Vec<RowKind>,
    /// Slice partitions on the interfaces `0..=rows`.
    pub interfaces: Vec<Partition>,
    /// Maya centre (= number of paths) on each interface.
    pub centers: Vec<usize>,
    /// Number of columns in the window.
    pub ncols: usize,
    /// Vertex states per row.
    pub states: Vec<Vec<VertexState>>,
}

impl VertexConfig {
    /// x-degree of each row (index `k − 1` for row `k`).
    pub fn row_exponents(&self) -> Vec<i64> {
        self.kinds
            .iter()
            .zip(&self.states)
            .map(|(&k, row)| row.iter().map(|&s| vertex_exponent(k, s).expect("stored states are allowed")).sum())
            .collect()
    }

    /// Weight under `x_k = q^{+k}` (gray row `k`) / `q^{−k}` (white row `k`).
    pub fn weight_q(&self) -> i64 {
        q_specialize(&self.kinds, &self.row_exponents())
    }

    /// Particle columns on interface `k`.
    pub fn particles(&self, k: usize) -> Vec<usize> {
        particle_columns(&self.interfaces[k], self.centers[k]).expect("checked at construction")
    }
}

/// `Σ_k ±k·e_k` with `+` for gray rows and `−` for white rows.
pub fn q_specialize(kinds: &[RowKind], exps: &[i64]) -> i64 {
    kinds
        .iter()
        .zip(exps)
        .enumerate()
        .map(|(i, (&k, &e))| {
            let idx = i as i64 + 1;
            match k {
                RowKind::White => -idx * e,
                RowKind::Gray => idx * e,
            }
        })
        .sum()
}

/// Window width used for configurations of `Λ`: room for the largest part
/// plus two tail columns.
pub fn config_columns(lambda: &Partition, max_entry: u64) -> usize {
    lambda.len() + max_entry as usize + 2
}

/// Maya centres on the interfaces `0..=rows` for a row-kind sequence.
pub fn interface_centers(lambda: &Partition, kinds: &[RowKind]) -> Vec<usize> {
    let mut centers = vec![lambda.len()];
    for k in kinds {
        let c = *centers.last().unwrap();
        centers.push(match k {
            RowKind::White => c,
            RowKind::Gray => c - 1,
        });
    }
    centers
}

/// The vertex configuration of an RPP: one row per relation of the
/// interaction pattern (white for `⪯`, gray for `⪰`), slices on the
/// interfaces, and the unique filling of each row.
pub fn rpp_to_config(rpp: &RPP) -> Result<VertexConfig> {
    let shape = rpp.shape().clone();
    let kinds: Vec<RowKind> = interaction_pattern(&shape).into_iter().map(RowKind::from_relation).collect();
    let slices = to_slices(rpp).slices;
    let centers = interface_centers(&shape, &kinds);
    let ncols = config_columns(&shape, rpp.max_entry());
    let mut states = Vec::with_capacity(kinds.len());
    for (k, &kind) in kinds.iter().enumerate() {
        let bottom = particle_columns(&slices[k], centers[k])?;
        let top = particle_columns(&slices[k + 1], centers[k + 1])?;
        let row = fill_row(kind, &bottom, &top, ncols)?
            .ok_or_else(|| Error::Internal(format!("row {} of {shape} has no filling", k + 1)))?;
        states.push(row);
    }
    Ok(VertexConfig { shape, kinds, interfaces: slices, centers, ncols, states })
}

/// Exponent `e` of `A_λ(q) = q^e = q^{−Σ_i (λ_i + ℓ − i + 1)(i − 1)}`.
pub fn a_lambda_exponent(lambda: &Partition) -> i64 {
    let ell = lambda.len() as i64;
    -(1..=ell).map(|i| (lambda.part(i as usize) as i64 + ell - i + 1) * (i - 1)).sum::<i64>()
}

/// `A_λ(q)` as a monomial.
pub fn a_lambda(lambda: &Partition) -> QtMonomial {
    QtMonomial::new(a_lambda_exponent(lambda), 0)
}

/// `w(𝒞)` for the configuration of `Λ` under the `q`-specialisation.
pub fn config_weight_q(rpp: &RPP) -> Result<QtMonomial> {
    Ok(QtMonomial::new(rpp_to_config(rpp)?.weight_q(), 0))
}

/// Which pair of vertex colours a Yang–Baxter equation relates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum YbeKind {
    /// Both rows white; `z = y/x`.
    WhiteWhite,
    /// The `x`-row gray, the `y`-row white; `z = yx`.
    WhiteGray,
}

impl YbeKind {
    pub fn x_row(self) -> RowKind {
        match self {
            YbeKind::WhiteWhite => RowKind::White,
            YbeKind::WhiteGray => RowKind::Gray,
        }
    }

    pub fn z(self, x: &BigRational, y: &BigRational) -> BigRational {
        match self {
            YbeKind::WhiteWhite => y / x,
            YbeKind::WhiteGray => y * x,
        }
    }
}

/// Boundary edges of a Yang–Baxter configuration: left inputs `i1` (top),
/// `i2` (bottom); bottom input `i3`; right outputs `j1` (bottom), `j2` (top);
/// top output `j3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YbeBoundary {
    pub i1: bool,
    pub i2: bool,
    pub i3: bool,
    pub j1: bool,
    pub j2: bool,
    pub j3: bool,
}

impl YbeBoundary {
    /// All 64 assignments, indexed by the bits `i1 i2 i3 j1 j2 j3`.
    pub fn all() -> Vec<YbeBoundary> {
        (0..64u32)
            .map(|m| {
                let bit = |k: u32| m >> (5 - k) & 1 == 1;
                YbeBoundary { i1: bit(0), i2: bit(1), i3: bit(2), j1: bit(3), j2: bit(4), j3: bit(5) }
            })
            .collect()
    }
}

fn vweight(kind: RowKind, v: VertexState, x: &BigRational) -> BigRational {
    match v.kind() {
        Err(_) => BigRational::zero(),
        Ok(_) => match kind {
            RowKind::White => white_weight(v, x).unwrap(),
            RowKind::Gray => gray_weight(v, x).unwrap(),
        },
    }
}

fn cweight(v: CrossState, z: &BigRational) -> BigRational {
    cross_weight(v, z).unwrap_or_else(|_| BigRational::zero())
}

/// Both sides of the Yang–Baxter equation for one boundary.
///
/// Left: the crossing on the left feeding a column with the `x`-vertex below
/// the `y`-vertex. Right: the `y`-vertex below the `x`-vertex, followed by
/// the crossing on the right.
pub fn ybe_sides(kind: YbeKind, b: YbeBoundary, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
    let z = kind.z(x, y);
    let xk = kind.x_row();
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for a_top in [false, true] {
        for a_bot in [false, true] {
            for m in [false, true] {
                let cross = cweight(CrossState::new(b.i1, b.i2, a_top, a_bot), &z);
                let bot = vweight(xk, VertexState::new(b.i3, a_bot, m, b.j1), x);
                let top = vweight(RowKind::White, VertexState::new(m, a_top, b.j3, b.j2), y);
                lhs += cross * bot * top;

                let bot = vweight(RowKind::White, VertexState::new(b.i3, b.i2, m, a_bot), y);
                let top = vweight(xk, VertexState::new(m, b.i1, b.j3, a_top), x);
                let cross = cweight(CrossState::new(a_top, a_bot, b.j2, b.j1), &z);
                rhs += bot * top * cross;
            }
        }
    }
    (lhs, rhs)
}

/// One failing boundary of a Yang–Baxter sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YbeDiscrepancy {
    pub boundary: serde_json::Value,
    pub sample: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive Yang–Baxter sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YbeReport {
    pub mode: String,
    pub boundaries: usize,
    pub samples: usize,
    pub nonzero_checks: usize,
    pub violations: Vec<YbeDiscrepancy>,
}

impl YbeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the one-colour YBE for all 64 boundaries at each `(x, y)` sample.
pub fn verify_ybe(kind: YbeKind, samples: &[(BigRational, BigRational)]) -> YbeReport {
    let results: Vec<(usize, Vec<YbeDiscrepancy>)> = samples
        .par_iter()
        .map(|(x, y)| {
            let mut nonzero = 0;
            let mut bad = Vec::new();
            for b in YbeBoundary::all() {
                let (l, r) = ybe_sides(kind, b, x, y);
                if !l.is_zero() {
                    nonzero += 1;
                }
                if l != r {
                    bad.push(YbeDiscrepancy {
                        boundary: serde_json::to_value(b).unwrap(),
                        sample: vec![x.to_string(), y.to_string()],
                        lhs: l.to_string(),
                        rhs: r.to_string(),
                    });
                }
            }
            (nonzero, bad)
        })
        .collect();
    YbeReport {
        mode: format!("{kind:?}"),
        boundaries: 64,
        samples: samples.len(),
        nonzero_checks: results.iter().map(|r| r.0).sum(),
        violations: results.into_iter().flat_map(|r| r.1).collect(),
    }
}

/// Window for the commutation check: `paths` paths enter at the bottom;
/// intermediate partitions with first part up to `width` are summed
/// vertex by vertex, the rest by the geometric tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationWindow {
    pub paths: usize,
    pub width: usize,
}

/// Both sides of the commutation relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationReport {
    /// Gray row (x) below white row (y).
    pub gray_below_white: String,
    /// White row (y) below gray row (x), including the geometric tail.
    pub white_below_gray: String,
    /// `(1 − xy)` times the previous value.
    pub scaled: String,
    pub holds: bool,
}

/// All partitions `ν` with `len` parts (zero-padded) and
/// `lo_i ≤ ν_i ≤ hi_i`, weakly decreasing.
fn boxed_partitions(bounds: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(i: usize, bounds: &[(usize, usize)], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == bounds.len() {
            out.push(cur.clone());
            return;
        }
        let (lo, mut hi) = bounds[i];
        if i > 0 {
            hi = hi.min(cur[i - 1]);
        }
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, bounds, cur, out);
            cur.pop();
        }
    }
    rec(0, bounds, &mut Vec::new(), &mut out);
    out
}

/// Checks `Z(gray_x below white_y) = (1 − xy)·Z(white_y below gray_x)` for
/// bottom boundary `μ` (with `window.paths` paths) and top boundary `λ`
/// (one path fewer), the missing path leaving through the right edge of
/// whichever row is gray.
///
/// The second partition function is an infinite sum over the intermediate
/// first part `ν_1`. Terms with `ν_1 ≤ width` are computed vertex by vertex;
/// the remaining terms form the geometric tail `(xy)^{width+1}/(1 − xy)`
/// times a finite sum, evaluated with the closed row weights.
pub fn verify_commutation(
    mu: &Partition,
    lambda: &Partition,
    x: &BigRational,
    y: &BigRational,
    window: CommutationWindow,
) -> Result<CommutationReport> {
    let p = window.paths;
    if p == 0 || mu.len() > p || lambda.len() > p - 1 {
        return Err(Error::InvalidRow(format!("{mu} / {lambda} do not fit {p} / {} paths", p.saturating_sub(1))));
    }
    let big = mu.first().max(lambda.first());
    if window.width < big {
        return Err(Error::WindowTooNarrow { half_width: window.width, needed: big });
    }
    let xy = x * y;
    if xy.abs() >= BigRational::one() {
        return Err(Error::BadInput("commutation needs |xy| < 1".into()));
    }
    let ncols_extra = window.width + 2;
    // Gray x below white y: intermediate ν with p − 1 paths, ν ⪯ μ and ν ⪯ λ.
    let bounds: Vec<(usize, usize)> = (1..p)
        .map(|i| (mu.part(i + 1).max(lambda.part(i + 1)), mu.part(i).min(lambda.part(i))))
        .collect();
    let mut lhs = BigRational::zero();
    if bounds.iter().all(|&(lo, hi)| lo <= hi) {
        for nu in boxed_partitions(&bounds) {
            let nu = Partition::from_padded(nu)?;
            let gray = RowSpec { kind: RowKind::Gray, x: x.clone(), ell: p - 1, window: ncols_extra + 1 };
            let white = RowSpec { kind: RowKind::White, x: y.clone(), ell: p - 1, window: ncols_extra + 1 };
            if let (Some(a), Some(b)) = (row_weight_explicit(&gray, mu, &nu)?, row_weight_explicit(&white, &nu, lambda)?) {
                lhs += a * b;
            }
        }
    }
    // White y below gray x: intermediate ν with p paths, μ ⪯ ν and λ ⪯ ν.
    let rest: Vec<(usize, usize)> =
        (2..=p).map(|i| (mu.part(i).max(lambda.part(i)), mu.part(i - 1).min(lambda.part(i - 1)))).collect();
    let mut rhs = BigRational::zero();
    if rest.iter().all(|&(lo, hi)| lo <= hi) {
        let rest_parts = boxed_partitions(&rest);
        for nu1 in big..=window.width {
            for tail in &rest_parts {
                if tail.first().is_some_and(|&v| v > nu1) {
                    continue;
                }
                let mut parts = vec![nu1];
                parts.extend(tail);
                let nu = Partition::from_padded(parts)?;
                let white = RowSpec { kind: RowKind::White, x: y.clone(), ell: p, window: ncols_extra };
                let gray = RowSpec { kind: RowKind::Gray, x: x.clone(), ell: p - 1, window: ncols_extra + 1 };
                if let (Some(a), Some(b)) = (row_weight_explicit(&white, mu, &nu)?, row_weight_explicit(&gray, &nu, lambda)?) {
                    rhs += a * b;
                }
            }
        }
        // Tail ν_1 = width + 1, width + 2, …: each step multiplies by xy.
        let mut tail_sum = BigRational::zero();
        for tail in &rest_parts {
            let mut parts = vec![window.width + 1];
            parts.extend(tail);
            let nu = Partition::from_padded(parts)?;
            let a = row_weight_closed(RowKind::White, mu, &nu, y, p);
            let b = row_weight_closed(RowKind::Gray, &nu, lambda, x, p - 1);
            if let (Some(a), Some(b)) = (a, b) {
                tail_sum += a * b;
            }
        }
        rhs += tail_sum / (BigRational::one() - &xy);
    }
    let scaled = (BigRational::one() - &xy) * &rhs;
    Ok(CommutationReport {
        gray_below_white: lhs.to_string(),
        white_below_gray: rhs.to_string(),
        scaled: scaled.to_string(),
        holds: lhs == scaled,
    })
}
