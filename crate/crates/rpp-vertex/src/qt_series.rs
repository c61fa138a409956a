//! Truncated bivariate power series in `q` and `t` with exact nonnegative
//! integer coefficients, and the hook-length products.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{hook_table, Partition};

/// `Σ c_{n,k} q^n t^k` with all terms of q-degree above `trunc_q` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTSeries {
    trunc_q: u32,
    coeffs: BTreeMap<(u32, u32), BigUint>,
}

impl QTSeries {
    /// The zero series.
    pub fn zero(trunc_q: u32) -> Self {
        QTSeries { trunc_q, coeffs: BTreeMap::new() }
    }

    /// The constant series 1.
    pub fn one(trunc_q: u32) -> Self {
        let mut s = QTSeries::zero(trunc_q);
        s.add_term(0, 0, 1u32);
        s
    }

    /// Maximum retained q-degree.
    pub fn trunc_q(&self) -> u32 {
        self.trunc_q
    }

    /// Adds `c q^n t^k`; ignored when `n` exceeds the truncation.
    pub fn add_term(&mut self, n: u32, k: u32, c: impl Into<BigUint>) {
        let c = c.into();
        if n > self.trunc_q || c.is_zero() {
            return;
        }
        *self.coeffs.entry((n, k)).or_default() += c;
    }

    /// Coefficient of `q^n t^k`.
    pub fn coeff(&self, n: u32, k: u32) -> BigUint {
        self.coeffs.get(&(n, k)).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^n t^k` as `u64` (panics if it does not fit).
    pub fn coeff_u64(&self, n: u32, k: u32) -> u64 {
        self.coeff(n, k).to_u64().expect("coefficient exceeds u64")
    }

    /// Nonzero terms in lexicographic `(n, k)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.coeffs.iter().map(|(&(n, k), c)| (n, k, c))
    }

    /// Exact truncated product.
    pub fn mul(&self, other: &QTSeries) -> Result<QTSeries> {
        if self.trunc_q != other.trunc_q {
            return Err(Error::TruncationMismatch(self.trunc_q, other.trunc_q));
        }
        let mut out = QTSeries::zero(self.trunc_q);
        for (&(n1, k1), c1) in &self.coeffs {
            for (&(n2, k2), c2) in &other.coeffs {
                if n1 + n2 > self.trunc_q {
                    continue;
                }
                out.add_term(n1 + n2, k1 + k2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Sum of two series.
    pub fn add(&self, other: &QTSeries) -> Result<QTSeries> {
        if self.trunc_q != other.trunc_q {
            return Err(Error::TruncationMismatch(self.trunc_q, other.trunc_q));
        }
        let mut out = self.clone();
        for (&(n, k), c) in &other.coeffs {
            out.add_term(n, k, c.clone());
        }
        Ok(out)
    }

    /// The `t = 0` slice: terms of t-degree zero.
    pub fn slice_at_t_zero(&self) -> QTSeries {
        QTSeries {
            trunc_q: self.trunc_q,
            coeffs: self.coeffs.iter().filter(|(&(_, k), _)| k == 0).map(|(&nk, c)| (nk, c.clone())).collect(),
        }
    }

    /// The `t = 1` specialisation, as a series whose t-degrees are all zero.
    pub fn at_t_one(&self) -> QTSeries {
        let mut out = QTSeries::zero(self.trunc_q);
        for (&(n, _), c) in &self.coeffs {
            out.add_term(n, 0, c.clone());
        }
        out
    }

    /// Lists the `(n, k)` positions where two series differ.
    pub fn diff_positions(&self, other: &QTSeries) -> Vec<(u32, u32)> {
        let mut keys: Vec<(u32, u32)> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().filter(|&(n, k)| self.coeff(n, k) != other.coeff(n, k)).collect()
    }

    /// JSON view `{"trunc_q": N, "coeffs": [[n,k,c], ...]}`.
    pub fn to_json(&self) -> QTSeriesJson {
        QTSeriesJson {
            trunc_q: self.trunc_q,
            coeffs: self.coeffs.iter().map(|(&(n, k), c)| (n, k, c.to_string())).collect(),
        }
    }

    /// Parses the JSON view.
    pub fn from_json(j: &QTSeriesJson) -> Result<Self> {
        let mut s = QTSeries::zero(j.trunc_q);
        for (n, k, c) in &j.coeffs {
            if *n > j.trunc_q {
                return Err(Error::BadInput(format!("term q^{n} beyond truncation {}", j.trunc_q)));
            }
            let c: BigUint = c.parse().map_err(|_| Error::BadInput(format!("bad coefficient {c}")))?;
            s.add_term(*n, *k, c);
        }
        Ok(s)
    }
}

/// Serialisable form of [`QTSeries`]; coefficients are decimal strings when
/// they exceed `u64`, plain integers otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTSeriesJson {
    pub trunc_q: u32,
    #[serde(with = "coeff_triples")]
    pub coeffs: Vec<(u32, u32, String)>,
}

mod coeff_triples {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(v: &[(u32, u32, String)], s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<Value> = v
            .iter()
            .map(|(n, k, c)| {
                let cv = match c.parse::<u64>() {
                    Ok(x) => Value::from(x),
                    Err(_) => Value::from(c.clone()),
                };
                Value::Array(vec![Value::from(*n), Value::from(*k), cv])
            })
            .collect();
        vals.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(u32, u32, String)>, D::Error> {
        let vals: Vec<(u32, u32, Value)> = Vec::deserialize(d)?;
        vals.into_iter()
            .map(|(n, k, c)| match c {
                Value::Number(x) => Ok((n, k, x.to_string())),
                Value::String(x) => Ok((n, k, x)),
                other => Err(D::Error::custom(format!("bad coefficient {other}"))),
            })
            .collect()
    }
}

impl fmt::Display for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(q^{})", self.trunc_q + 1);
        }
        let mut first = true;
        for (&(n, k), c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (n, k) {
                (0, 0) => String::new(),
                (n, 0) => format!("q^{n}"),
                (0, k) => format!("t^{k}"),
                (n, k) => format!("q^{n} t^{k}"),
            };
            let one = BigUint::from(1u32);
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if *c == one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c} {mono}")?;
            }
        }
        write!(f, " + O(q^{})", self.trunc_q + 1)
    }
}

/// `1/(1 − q^a t^b) = Σ_m q^{am} t^{bm}` truncated at q-degree `n_max`.
pub fn geometric_inverse(a: u32, b: u32, n_max: u32) -> Result<QTSeries> {
    if a == 0 {
        return Err(Error::ZeroQExponent);
    }
    let mut s = QTSeries::zero(n_max);
    let mut m = 0;
    while a * m <= n_max {
        s.add_term(a * m, b * m, 1u32);
        m += 1;
    }
    Ok(s)
}

/// `∏_{c ∈ λ} 1/(1 − q^{h(c)})` truncated at `n_max`.
pub fn hook_product_single(lambda: &Partition, n_max: u32) -> QTSeries {
    let mut acc = QTSeries::one(n_max);
    for h in hook_table(lambda).into_iter().flatten() {
        let g = geometric_inverse(h as u32, 0, n_max).expect("hooks are positive");
        acc = acc.mul(&g).expect("same truncation");
    }
    acc
}

/// `∏_{c ∈ λ} 1/((1 − q^{h(c)})(1 − q^{h(c)} t))` truncated at `n_max`.
pub fn hook_product_pair(lambda: &Partition, n_max: u32) -> QTSeries {
    let mut acc = QTSeries::one(n_max);
    for h in hook_table(lambda).into_iter().flatten() {
        for b in [0, 1] {
            let g = geometric_inverse(h as u32, b, n_max).expect("hooks are positive");
            acc = acc.mul(&g).expect("same truncation");
        }
    }
    acc
}
