use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ZetaError;
use crate::curves::{CurveError, LPoly};

/// Invariants that determine `Z(t,u)` for genus ≤ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveParams {
    Genus0 { q: i64 },
    /// `n` is the number of rational points.
    Genus1 { q: i64, n: i64 },
    /// `L(t) = 1 + at + bt² + qat³ + q²t⁴`.
    Genus2 { q: i64, a: i64, b: i64 },
}

impl CurveParams {
    pub fn genus(&self) -> usize {
        match self {
            CurveParams::Genus0 { .. } => 0,
            CurveParams::Genus1 { .. } => 1,
            CurveParams::Genus2 { .. } => 2,
        }
    }

    pub fn q(&self) -> i64 {
        match *self {
            CurveParams::Genus0 { q } | CurveParams::Genus1 { q, .. } | CurveParams::Genus2 { q, .. } => q,
        }
    }

    /// Class number `h = L(1)`.
    pub fn h(&self) -> i64 {
        match *self {
            CurveParams::Genus0 { .. } => 1,
            CurveParams::Genus1 { n, .. } => n,
            CurveParams::Genus2 { q, a, b } => b + a * (q + 1) + q * q + 1,
        }
    }

    /// Coefficients of `L(t)`, low degree first.
    pub fn l_coeffs(&self) -> Vec<i64> {
        match *self {
            CurveParams::Genus0 { .. } => vec![1],
            CurveParams::Genus1 { q, n } => vec![1, n - q - 1, q],
            CurveParams::Genus2 { q, a, b } => vec![1, a, b, q * a, q * q],
        }
    }

    pub fn l_poly(&self) -> Result<LPoly, CurveError> {
        LPoly::new(self.q() as u64, self.genus(), &self.l_coeffs())
    }

    /// Parameters read off an L-polynomial (and thus off a curve).
    pub fn from_l(l: &LPoly) -> Result<Self, ZetaError> {
        let q = l.q() as i64;
        match l.genus() {
            0 => Ok(CurveParams::Genus0 { q }),
            1 => Ok(CurveParams::Genus1 { q, n: l.a() + q + 1 }),
            2 => Ok(CurveParams::Genus2 { q, a: l.a(), b: l.b() }),
            g => Err(ZetaError::UnsupportedGenus(g)),
        }
    }

    /// Rejects parameter sets no smooth curve can have, unless `synthetic`.
    pub fn validate(&self, synthetic: bool) -> Result<(), ZetaError> {
        if self.q() < 2 {
            return Err(ZetaError::Unrealizable(format!("q = {} < 2", self.q())));
        }
        if synthetic {
            return Ok(());
        }
        match *self {
            CurveParams::Genus0 { .. } => Ok(()),
            CurveParams::Genus1 { n, .. } if n < 1 => {
                Err(ZetaError::Unrealizable(format!("genus-1 curves have N >= 1, got N = {n}")))
            }
            CurveParams::Genus1 { q, n } if !hasse(q, 1, 1, n) => {
                Err(ZetaError::Unrealizable(format!("N = {n} outside the Hasse window for q = {q}")))
            }
            CurveParams::Genus1 { .. } => Ok(()),
            CurveParams::Genus2 { q, a, b } => {
                let h = self.h();
                let n1 = q + 1 + a;
                let n2 = q * q + 1 + 2 * b - a * a;
                let b21 = b + a * (q + 1) + q * q;
                if !hasse(q, 2, 1, n1) || !hasse(q, 2, 2, n2) {
                    Err(ZetaError::Unrealizable(format!(
                        "(N_1, N_2) = ({n1}, {n2}) outside the Hasse window for q = {q}"
                    )))
                } else if h < 1 {
                    Err(ZetaError::Unrealizable(format!("h = {h} < 1")))
                } else if n1 < 0 || n1 > h {
                    Err(ZetaError::Unrealizable(format!("N_1 = {n1} outside 0..=h")))
                } else if b21 < 0 {
                    Err(ZetaError::Unrealizable(format!("b_21 = {b21} < 0")))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// `(N_m − q^m − 1)² ≤ 4g²q^m`.
fn hasse(q: i64, g: i64, m: u32, n: i64) -> bool {
    let qm = (q as i128).pow(m);
    let d = n as i128 - qm - 1;
    d * d <= 4 * (g as i128).pow(2) * qm
}

/// Census `b_{nk}` of divisor classes of degree `n` with `h⁰ = k`.
///
/// Entries are stored for `0 ≤ n ≤ max(2g−2, 0)`, `k ≥ 1`. For
/// `n ≥ max(2g−1, 1)` the tail rule applies: `b_{n,n+1−g} = h`, all other
/// entries zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTable {
    g: usize,
    q: i64,
    h: i64,
    finite: BTreeMap<(usize, usize), i64>,
    synthetic: bool,
}

impl BTable {
    pub fn new(
        g: usize,
        q: i64,
        h: i64,
        finite: impl IntoIterator<Item = ((usize, usize), i64)>,
        synthetic: bool,
    ) -> Result<Self, ZetaError> {
        let mut map = BTreeMap::new();
        for ((n, k), b) in finite {
            if n > Self::finite_end(g) {
                return Err(ZetaError::InvalidTable(format!(
                    "entry ({n},{k}) lies in the tail range n >= {}",
                    Self::tail_start_for(g)
                )));
            }
            if k == 0 {
                return Err(ZetaError::InvalidTable(format!("entry ({n},0): k must be >= 1")));
            }
            if map.insert((n, k), b).is_some() {
                return Err(ZetaError::InvalidTable(format!("duplicate entry ({n},{k})")));
            }
        }
        map.retain(|_, b| *b != 0);
        let table = Self {
            g,
            q,
            h,
            finite: map,
            synthetic,
        };
        if !synthetic {
            table.validate()?;
        }
        Ok(table)
    }

    fn validate(&self) -> Result<(), ZetaError> {
        if self.h < 1 {
            return Err(ZetaError::InvalidTable(format!("h = {} < 1", self.h)));
        }
        if let Some(((n, k), b)) = self.finite.iter().find(|(_, &b)| b < 0) {
            return Err(ZetaError::InvalidTable(format!("b_{n}{k} = {b} < 0")));
        }
        if self.get(0, 1) != 1 || self.row(0).iter().any(|&(k, b)| k != 1 && b != 0) {
            return Err(ZetaError::InvalidTable(
                "degree 0 must hold exactly the trivial class with h0 = 1".into(),
            ));
        }
        for n in 0..=Self::finite_end(self.g) {
            let total: i64 = self.row(n).iter().map(|&(_, b)| b).sum();
            if total > self.h {
                return Err(ZetaError::InvalidTable(format!(
                    "degree {n} has {total} classes with h0 >= 1, more than h = {}",
                    self.h
                )));
            }
        }
        Ok(())
    }

    fn finite_end(g: usize) -> usize {
        (2 * g).saturating_sub(2)
    }

    fn tail_start_for(g: usize) -> usize {
        (2 * g).saturating_sub(1).max(1)
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn is_synthetic(&self) -> bool {
        self.synthetic
    }

    /// First degree governed by the tail rule, `max(2g−1, 1)`.
    pub fn tail_start(&self) -> usize {
        Self::tail_start_for(self.g)
    }

    /// `b_{nk}`, tail included.
    pub fn get(&self, n: usize, k: usize) -> i64 {
        if n >= self.tail_start() {
            if k + self.g == n + 1 {
                self.h
            } else {
                0
            }
        } else {
            self.finite.get(&(n, k)).copied().unwrap_or(0)
        }
    }

    /// Nonzero `(k, b_{nk})` for degree `n`, tail included.
    pub fn row(&self, n: usize) -> Vec<(usize, i64)> {
        if n >= self.tail_start() {
            if self.h == 0 {
                Vec::new()
            } else {
                vec![(n + 1 - self.g, self.h)]
            }
        } else {
            self.finite
                .range((n, 0)..=(n, usize::MAX))
                .map(|(&(_, k), &b)| (k, b))
                .collect()
        }
    }

    /// Stored entries of the finite range.
    pub fn finite_entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.finite.iter().map(|(&nk, &b)| (nk, b))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BTableJson::from(self)).expect("plain data")
    }

    pub fn from_json_str(text: &str) -> Result<Self, ZetaError> {
        let raw: BTableJson = serde_json::from_str(text).map_err(|e| ZetaError::Json(e.to_string()))?;
        raw.into_table()
    }
}

/// `{"g", "q", "h", "finite": [[n, k, b], …]}`; the tail is implied.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BTableJson {
    pub g: usize,
    pub q: i64,
    pub h: i64,
    pub finite: Vec<(usize, usize, i64)>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub synthetic: bool,
}

impl From<&BTable> for BTableJson {
    fn from(t: &BTable) -> Self {
        Self {
            g: t.g,
            q: t.q,
            h: t.h,
            finite: t.finite_entries().map(|((n, k), b)| (n, k, b)).collect(),
            synthetic: t.synthetic,
        }
    }
}

impl BTableJson {
    pub fn into_table(self) -> Result<BTable, ZetaError> {
        BTable::new(
            self.g,
            self.q,
            self.h,
            self.finite.into_iter().map(|(n, k, b)| ((n, k), b)),
            self.synthetic,
        )
    }
}

/// Divisor-class census from Riemann–Roch and Clifford.
///
/// * `g = 0`: `b_{n,n+1} = 1` for all `n ≥ 0`.
/// * `g = 1`: `b_{0,1} = 1`, tail `b_{n,n} = N` from `n = 1`.
/// * `g = 2`: `b_{0,1} = 1`, `b_{1,1} = N_1 = q + 1 + a`, `b_{2,1} = A_2 − (q+1)`
///   with `A_2 = b + a(q+1) + q² + q + 1`, `b_{2,2} = 1` (the canonical class),
///   tail `b_{n,n−1} = h` from `n = 3`. `b_{1,2} = b_{2,3} = 0`.
pub fn btable_structural(params: CurveParams, synthetic: bool) -> Result<BTable, ZetaError> {
    params.validate(synthetic)?;
    let q = params.q();
    let h = params.h();
    let mut finite = vec![((0, 1), 1)];
    let g = params.genus();
    if let CurveParams::Genus2 { a, b, .. } = params {
        let a2 = b + a * (1 + q) + 1 + q + q * q;
        finite.push(((1, 1), q + 1 + a));
        finite.push(((2, 1), a2 - (q + 1)));
        finite.push(((2, 2), 1));
    }
    BTable::new(g, q, h, finite, synthetic)
}
