use num_traits::{One, Zero};

use super::CurveError;
use crate::arith::{int, rat, rat_to_i64, Rat, UniPoly, Var};

/// `N_m = |X(F_{q^m})|` for `m = 1..=g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCounts {
    q: u64,
    g: usize,
    counts: Vec<u64>,
}

impl PointCounts {
    /// Rejects counts outside `|N_m − (q^m + 1)| ≤ 2g·q^{m/2}`.
    pub fn new(q: u64, g: usize, counts: Vec<u64>) -> Result<Self, CurveError> {
        if counts.len() < g {
            return Err(CurveError::MissingCounts {
                expected: g,
                got: counts.len(),
            });
        }
        for (i, &n) in counts.iter().enumerate() {
            let m = i as u32 + 1;
            let qm = q.pow(m) as i128;
            let dev = n as i128 - qm - 1;
            if dev * dev > 4 * (g * g) as i128 * qm {
                return Err(CurveError::HasseViolation { m: i + 1, count: n });
            }
        }
        Ok(Self { q, g, counts })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    /// `N_m`, 1-based.
    pub fn get(&self, m: usize) -> u64 {
        self.counts[m - 1]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }
}

/// Numerator `L(t)` of the classical zeta function with its context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoly {
    poly: UniPoly,
    q: u64,
    g: usize,
}

impl LPoly {
    /// Validates degree `2g`, `L(0) = 1`, integrality and the symmetry
    /// `c_{2g−i} = q^{g−i}·c_i`. Does not require `L(1) ≥ 1`.
    pub fn new(q: u64, g: usize, coeffs: &[i64]) -> Result<Self, CurveError> {
        let poly = UniPoly::from_ints(Var::T, coeffs);
        if poly.degree() != 2 * g as isize {
            return Err(CurveError::InvalidLPoly(format!(
                "degree {} differs from 2g = {}",
                poly.degree(),
                2 * g
            )));
        }
        if !poly.coeff(0).is_one() {
            return Err(CurveError::InvalidLPoly("L(0) != 1".into()));
        }
        let l = Self { poly, q, g };
        if let Some(i) = l.symmetry_defect() {
            return Err(CurveError::InvalidLPoly(format!(
                "c_{} != q^{} * c_{i}",
                2 * g - i,
                g - i
            )));
        }
        Ok(l)
    }

    /// First `i ≤ g` where the functional equation fails, if any.
    pub fn symmetry_defect(&self) -> Option<usize> {
        (0..=self.g).find(|&i| {
            let scale = int(num_bigint::BigInt::from(self.q).pow((self.g - i) as u32));
            self.poly.coeff(2 * self.g - i) != self.poly.coeff(i) * scale
        })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn coeff(&self, i: usize) -> i64 {
        rat_to_i64(&self.poly.coeff(i)).expect("L has integral coefficients")
    }

    /// Coefficient of `t` (`a` in `1 + at + bt² + qat³ + q²t⁴`).
    pub fn a(&self) -> i64 {
        self.coeff(1)
    }

    /// Coefficient of `t²`.
    pub fn b(&self) -> i64 {
        self.coeff(2)
    }

    pub fn h(&self) -> i64 {
        class_number(self)
    }
}

/// `h = L(1)`.
pub fn class_number(l: &LPoly) -> i64 {
    rat_to_i64(&l.poly.eval(&Rat::one())).expect("L has integral coefficients")
}

/// `L(t) = (1 − t)(1 − qt)·exp(Σ N_m t^m / m)` to order `t^g`, completed by the
/// functional equation. Exact over ℚ.
pub fn l_polynomial(counts: &PointCounts) -> Result<LPoly, CurveError> {
    let (q, g) = (counts.q(), counts.genus());
    // log Z(t) truncated: s_m = N_m / m
    let s: Vec<Rat> = (0..=g)
        .map(|m| if m == 0 { Rat::zero() } else { rat(counts.get(m) as i64) / rat(m as i64) })
        .collect();
    // exp via n·e_n = Σ_{k=1}^{n} k·s_k·e_{n−k}
    let mut e = vec![Rat::one()];
    for n in 1..=g {
        let acc = (1..=n).fold(Rat::zero(), |acc, k| acc + rat(k as i64) * &s[k] * &e[n - k]);
        e.push(acc / rat(n as i64));
    }
    let series = UniPoly::new(Var::T, e);
    let factor = UniPoly::new(Var::T, vec![rat(1), -rat(q as i64 + 1), rat(q as i64)]);
    let product = &factor * &series;
    let mut coeffs = vec![0i64; 2 * g + 1];
    for (i, c) in coeffs.iter_mut().enumerate().take(g + 1) {
        let v = product.coeff(i);
        *c = rat_to_i64(&v).map_err(|_| CurveError::NonIntegral {
            index: i,
            value: v.to_string(),
        })?;
    }
    for i in 0..g {
        coeffs[2 * g - i] = (q as i64).pow((g - i) as u32) * coeffs[i];
    }
    let l = LPoly::new(q, g, &coeffs)?;
    let h = class_number(&l);
    if h <= 0 {
        return Err(CurveError::NonPositiveClassNumber(h));
    }
    Ok(l)
}
