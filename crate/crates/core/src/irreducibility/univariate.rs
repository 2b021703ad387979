use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IrrError;
use crate::arith::{Rat, UniPoly};

/// Factors a nonzero `p ∈ ℚ[t]` with `deg p ≤ 4` into monic irreducibles over ℚ.
///
/// Linear factors come from the rational-root test on the primitive integer
/// multiple of `p`; a quartic without rational roots is then tested for a
/// split into two integer quadratics. The result is sorted by degree, then by
/// coefficients, and the leading constant is dropped.
pub fn factor_univariate(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, IrrError> {
    if p.is_zero() {
        return Err(IrrError::Zero);
    }
    if p.degree() > 4 {
        return Err(IrrError::DegreeTooLarge(p.degree()));
    }
    let var = p.var();
    let mut f = primitive(p);
    let mut out: Vec<UniPoly> = Vec::new();

    while f.len() > 1 {
        match rational_root(&f)? {
            Some((n, d)) => {
                f = divide_linear(&f, &n, &d);
                out.push(UniPoly::new(var, vec![-Rat::new(n, d), Rat::one()]));
            }
            None => break,
        }
    }
    match f.len() - 1 {
        0 => {}
        4 => match quadratic_split(&f)? {
            Some((g, h)) => {
                out.push(to_monic(var, &g));
                out.push(to_monic(var, &h));
            }
            None => out.push(to_monic(var, &f)),
        },
        _ => out.push(to_monic(var, &f)),
    }

    out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    let mut merged: Vec<(UniPoly, usize)> = Vec::new();
    for g in out {
        match merged.last_mut() {
            Some((last, m)) if *last == g => *m += 1,
            _ => merged.push((g, 1)),
        }
    }
    Ok(merged)
}

/// Integer coefficients (ascending) with content 1 and positive leading term.
fn primitive(p: &UniPoly) -> Vec<BigInt> {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
    ints.iter().map(|c| c / &content * sign).collect()
}

fn to_monic(var: crate::arith::Var, f: &[BigInt]) -> UniPoly {
    UniPoly::new(var, f.iter().map(|c| Rat::from_integer(c.clone())).collect()).monic()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, IrrError> {
    let m = n
        .abs()
        .to_u64()
        .ok_or_else(|| IrrError::CoefficientTooLarge(n.to_string()))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigInt::from).collect())
}

/// `d^deg · f(n/d)`, zero exactly when `n/d` is a root.
fn homogeneous_eval(f: &[BigInt], n: &BigInt, d: &BigInt) -> BigInt {
    let deg = f.len() - 1;
    let mut acc = BigInt::zero();
    for (i, c) in f.iter().enumerate() {
        acc += c * n.pow(i as u32) * d.pow((deg - i) as u32);
    }
    acc
}

fn rational_root(f: &[BigInt]) -> Result<Option<(BigInt, BigInt)>, IrrError> {
    if f[0].is_zero() {
        return Ok(Some((BigInt::zero(), BigInt::one())));
    }
    let nums = divisors(&f[0])?;
    let dens = divisors(f.last().unwrap())?;
    for d in &dens {
        for n in &nums {
            if !n.gcd(d).is_one() {
                continue;
            }
            for cand in [n.clone(), -n] {
                if homogeneous_eval(f, &cand, d).is_zero() {
                    return Ok(Some((cand, d.clone())));
                }
            }
        }
    }
    Ok(None)
}

/// Exact quotient of `f` by `d·t − n`.
fn divide_linear(f: &[BigInt], n: &BigInt, d: &BigInt) -> Vec<BigInt> {
    let deg = f.len() - 1;
    let mut q = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (1..=deg).rev() {
        let top = &f[i] + &carry;
        debug_assert!((&top % d).is_zero());
        q[i - 1] = &top / d;
        carry = &q[i - 1] * n;
    }
    debug_assert_eq!(&f[0] + &carry, BigInt::zero());
    q
}

type QuadraticPair = (Vec<BigInt>, Vec<BigInt>);

/// Searches `(A t² + B t + C)(D t² + E t + F)` equal to the integer quartic `f`
/// (ascending, `f[4] > 0`). Returns the quadratics in ascending form.
fn quadratic_split(f: &[BigInt]) -> Result<Option<QuadraticPair>, IrrError> {
    let (a0, a1, a2, a3, a4) = (&f[0], &f[1], &f[2], &f[3], &f[4]);
    let lead_divs = divisors(a4)?;
    let const_divs = divisors(a0)?;
    for a in &lead_divs {
        let d = a4 / a;
        for c0 in &const_divs {
            for c in [c0.clone(), -c0] {
                let ff = a0 / &c;
                for (b, e) in linear_solutions(a, &c, &d, &ff, a1, a2, a3) {
                    if a * &ff + &b * &e + &c * &d == *a2 && &b * &ff + &c * &e == *a1 {
                        return Ok(Some((vec![c.clone(), b, a.clone()], vec![ff.clone(), e, d.clone()])));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Integer `(B, E)` with `D·B + A·E = a3` and `F·B + C·E = a1`. When the
/// system is singular, `E` is eliminated through `a2` and `B` solves a quadratic.
fn linear_solutions(
    a: &BigInt,
    c: &BigInt,
    d: &BigInt,
    f: &BigInt,
    a1: &BigInt,
    a2: &BigInt,
    a3: &BigInt,
) -> Vec<(BigInt, BigInt)> {
    let det = d * c - a * f;
    if !det.is_zero() {
        let bn = a3 * c - a * a1;
        let en = d * a1 - f * a3;
        if (&bn % &det).is_zero() && (&en % &det).is_zero() {
            return vec![(bn / &det, en / &det)];
        }
        return vec![];
    }
    // D·B² − a3·B − A(A·F + C·D − a2) = 0
    let k = a * (a * f + c * d - a2);
    let disc = a3 * a3 + BigInt::from(4) * d * &k;
    if disc.is_negative() {
        return vec![];
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return vec![];
    }
    let mut out = Vec::new();
    for num in [a3 + &s, a3 - &s] {
        let den = BigInt::from(2) * d;
        if (&num % &den).is_zero() {
            let b = num / den;
            let en = a3 - &b * d;
            if (&en % a).is_zero() {
                out.push((b, en / a));
            }
        }
    }
    out
}
