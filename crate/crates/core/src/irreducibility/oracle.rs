use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{factor_univariate, IrrError};
use crate::arith::{rat, BiPoly, Rat, UniPoly, Var};

pub const MAX_ORACLE_DEGREE: isize = 4;

/// Extra specialization points beyond those needed to interpolate.
const MARGIN: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Every factor is monic in `t` (the input was monic).
    Monic,
    /// Every factor has constant term 1 in `t` (the input had `p(0,u) = 1`).
    ConstantTermOne,
}

/// A verified factorization into irreducibles of ℚ(u)[t] with coefficients in ℚ[u].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BiPoly, usize)>,
    pub normalization: Normalization,
}

impl Factorization {
    pub fn product(&self) -> BiPoly {
        self.factors
            .iter()
            .fold(BiPoly::one(), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|(f, m)| json!({"factor": f.to_string(), "matrix": f.to_json(), "multiplicity": m}))
            .collect();
        let norm = match self.normalization {
            Normalization::Monic => "monic",
            Normalization::ConstantTermOne => "constant_term_one",
        };
        json!({"factors": factors, "normalization": norm})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    IrreducibleOverQOfU,
    Factored(Factorization),
}

impl OracleOutcome {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, OracleOutcome::IrreducibleOverQOfU)
    }

    pub fn factorization(&self) -> Option<&Factorization> {
        match self {
            OracleOutcome::Factored(f) => Some(f),
            OracleOutcome::IrreducibleOverQOfU => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            OracleOutcome::IrreducibleOverQOfU => json!({"result": "irreducible_over_Q_of_u"}),
            OracleOutcome::Factored(f) => {
                let mut v = f.to_json();
                v["result"] = json!("factored");
                v
            }
        }
    }
}

/// Factors `p ∈ ℚ[u][t]` over ℚ(u) by evaluation and interpolation.
///
/// `p` must be monic in `t`, or satisfy `p(0,u) = 1`, in which case the
/// reversal is factored and every factor is reversed back. Irreducible inputs
/// of positive degree report `IrreducibleOverQOfU`; constants factor as the empty product.
pub fn factor_oracle(p: &BiPoly) -> Result<OracleOutcome, IrrError> {
    let n = p.deg_t();
    if n > MAX_ORACLE_DEGREE {
        return Err(IrrError::DegreeTooLarge(n));
    }
    let (monic, normalization) = if p.is_monic_t() {
        (p.clone(), Normalization::Monic)
    } else if p.coeff_t(0) == UniPoly::one(Var::U) {
        (p.reverse_t(n as usize)?, Normalization::ConstantTermOne)
    } else {
        return Err(IrrError::NotNormalized);
    };

    let mut factors = factor_monic(&monic)?;
    if normalization == Normalization::ConstantTermOne {
        factors = factors
            .into_iter()
            .map(|f| f.reverse_t(f.deg_t() as usize))
            .collect::<Result<_, _>>()?;
    }
    if n >= 1 && factors.len() == 1 {
        return Ok(OracleOutcome::IrreducibleOverQOfU);
    }

    factors.sort_by_key(|f| (f.deg_t(), f.to_string()));
    let mut merged: Vec<(BiPoly, usize)> = Vec::new();
    for f in factors {
        match merged.last_mut() {
            Some((last, m)) if *last == f => *m += 1,
            _ => merged.push((f, 1)),
        }
    }
    let fac = Factorization {
        factors: merged,
        normalization,
    };
    if fac.product() != *p {
        return Err(IrrError::Internal(format!("product mismatch for {p}")));
    }
    Ok(OracleOutcome::Factored(fac))
}

/// Irreducible monic factors, with repetition.
fn factor_monic(p: &BiPoly) -> Result<Vec<BiPoly>, IrrError> {
    let n = p.deg_t().max(0) as usize;
    if n <= 1 {
        return Ok(if n == 1 { vec![p.clone()] } else { vec![] });
    }
    for r in 1..=n / 2 {
        if let Some(f) = find_factor(p, r)? {
            let (quot, rem) = p.div_rem_monic(&f)?;
            debug_assert!(rem.is_zero());
            let mut out = factor_monic(&f)?;
            out.extend(factor_monic(&quot)?);
            return Ok(out);
        }
    }
    Ok(vec![p.clone()])
}

/// Newton-polygon bound on the `u`-degree of any coefficient of a monic degree-`r`
/// factor: roots grow at most like `u^ρ` with `ρ = max_i deg_u(c_i)/(n − i)`.
fn coefficient_degree_bound(p: &BiPoly, r: usize) -> usize {
    let n = p.deg_t() as usize;
    (0..n)
        .filter(|&i| !p.coeff_t(i).is_zero())
        .map(|i| r * p.coeff_t(i).degree() as usize / (n - i))
        .max()
        .unwrap_or(0)
}

/// Monic degree-`r` divisors of a univariate polynomial, deduplicated.
fn monic_divisors(f: &UniPoly, r: usize) -> Result<Vec<UniPoly>, IrrError> {
    let parts = factor_univariate(f)?;
    let mut out = Vec::new();
    let mut exps = vec![0usize; parts.len()];
    loop {
        let deg: usize = parts
            .iter()
            .zip(&exps)
            .map(|((g, _), e)| g.degree() as usize * e)
            .sum();
        if deg == r {
            let d = parts
                .iter()
                .zip(&exps)
                .fold(UniPoly::one(Var::T), |acc, ((g, _), e)| {
                    (0..*e).fold(acc, |a, _| &a * g)
                });
            out.push(d);
        }
        // odometer over 0..=multiplicity
        let mut i = 0;
        loop {
            if i == parts.len() {
                return Ok(out);
            }
            if exps[i] < parts[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Searches for a monic factor of degree `r` in ℚ[u][t].
fn find_factor(p: &BiPoly, r: usize) -> Result<Option<BiPoly>, IrrError> {
    let n = p.deg_t();
    let bound = coefficient_degree_bound(p, r);
    let needed = bound.max(p.deg_u().max(0) as usize) + 1;

    let mut points = Vec::new();
    let mut cands = Vec::new();
    let mut u0 = 2i64;
    while points.len() < needed + MARGIN {
        let spec = p.specialize_u(&rat(u0));
        if spec.degree() == n {
            let ds = monic_divisors(&spec, r)?;
            if ds.is_empty() {
                return Ok(None);
            }
            points.push(rat(u0));
            cands.push(ds);
        }
        u0 += 1;
    }

    let xs = &points[..needed];
    let mut choice = vec![0usize; needed];
    loop {
        if let Some(f) = try_choice(p, r, bound, xs, &cands, &choice, &points)? {
            return Ok(Some(f));
        }
        let mut i = 0;
        loop {
            if i == needed {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < cands[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn try_choice(
    p: &BiPoly,
    r: usize,
    bound: usize,
    xs: &[Rat],
    cands: &[Vec<UniPoly>],
    choice: &[usize],
    points: &[Rat],
) -> Result<Option<BiPoly>, IrrError> {
    let mut rows = Vec::with_capacity(r + 1);
    for k in 0..r {
        let ys: Vec<Rat> = choice
            .iter()
            .enumerate()
            .map(|(j, &c)| cands[j][c].coeff(k))
            .collect();
        let row = interpolate(xs, &ys);
        if row.degree() > bound as isize {
            return Ok(None);
        }
        rows.push(row);
    }
    rows.push(UniPoly::one(Var::U));
    let f = BiPoly::new(rows);
    for (j, x) in points.iter().enumerate().skip(xs.len()) {
        if !cands[j].contains(&f.specialize_u(x)) {
            return Ok(None);
        }
    }
    let (_, rem) = p.div_rem_monic(&f)?;
    Ok(rem.is_zero().then_some(f))
}

/// Newton interpolation over ℚ through `(xs[j], ys[j])`.
fn interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for j in (level..n).rev() {
            dd[j] = (&dd[j] - &dd[j - 1]) / (&xs[j] - &xs[j - level]);
        }
    }
    let mut acc = UniPoly::zero(Var::U);
    for j in (0..n).rev() {
        let lin = UniPoly::new(Var::U, vec![-xs[j].clone(), Rat::one()]);
        acc = &(&acc * &lin) + &UniPoly::constant(Var::U, dd[j].clone());
    }
    if acc.coeffs().iter().all(Zero::is_zero) {
        return UniPoly::zero(Var::U);
    }
    acc
}
