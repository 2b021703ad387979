use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::{join_terms, write_monomial};
use super::{rat, ArithError, Rat, UniPoly, Var};

/// Element of ℚ[u][t]: `rows[i]` is the coefficient of `t^i`, a polynomial in `u`.
///
/// Canonical: the last row is nonzero and each row is canonical, so structural
/// equality is polynomial equality. Degrees are recomputed on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    rows: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(rows: Vec<UniPoly>) -> Self {
        debug_assert!(rows.iter().all(|r| r.var() == Var::U));
        let mut p = Self { rows };
        while p.rows.last().is_some_and(UniPoly::is_zero) {
            p.rows.pop();
        }
        p
    }

    /// Integer matrix, row = t-exponent, column = u-exponent.
    pub fn from_int_matrix<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| UniPoly::from_ints(Var::U, r.as_ref()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![UniPoly::constant(Var::U, c)])
    }

    pub fn t() -> Self {
        Self::new(vec![UniPoly::zero(Var::U), UniPoly::one(Var::U)])
    }

    pub fn u() -> Self {
        Self::new(vec![UniPoly::x(Var::U)])
    }

    /// Lift a polynomial in `u` to a bivariate polynomial constant in `t`.
    pub fn from_u(p: UniPoly) -> Self {
        Self::new(vec![p.with_var(Var::U)])
    }

    /// Lift a polynomial in `t` to a bivariate polynomial constant in `u`.
    pub fn from_t(p: &UniPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(Var::U, c.clone()))
                .collect(),
        )
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    /// `P_i(u)`, the coefficient of `t^i`.
    pub fn coeff_t(&self, i: usize) -> UniPoly {
        self.rows
            .get(i)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::U))
    }

    /// Coefficient of `t^i u^k`.
    pub fn coeff(&self, i: usize, k: usize) -> Rat {
        self.rows.get(i).map(|r| r.coeff(k)).unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_t(&self) -> isize {
        self.rows.len() as isize - 1
    }

    pub fn deg_u(&self) -> isize {
        self.rows.iter().map(UniPoly::degree).max().unwrap_or(-1)
    }

    /// Leading coefficient as a polynomial in `t`, viewed in `u`.
    pub fn leading_t(&self) -> UniPoly {
        self.rows
            .last()
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::U))
    }

    pub fn is_monic_t(&self) -> bool {
        self.leading_t().as_constant().is_some_and(|c| c.is_one())
    }

    /// Coefficient of `u^k`, as a polynomial in `t`.
    pub fn coeff_u(&self, k: usize) -> UniPoly {
        UniPoly::new(Var::T, self.rows.iter().map(|r| r.coeff(k)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().all(UniPoly::is_integral)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn scale_u(&self, p: &UniPoly) -> Self {
        Self::new(self.rows.iter().map(|r| r * p).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut rows = vec![UniPoly::zero(Var::U); k];
        rows.extend(self.rows.iter().cloned());
        Self { rows }
    }

    /// Multiply by `u^k`.
    pub fn shift_u(&self, k: usize) -> Self {
        Self::new(self.rows.iter().map(|r| r.shift(k)).collect())
    }

    /// `t^d · p(1/t, u)`: row `i` of the result is row `d − i` of `self`.
    pub fn reverse_t(&self, d: usize) -> Result<Self, ArithError> {
        if self.deg_t() > d as isize {
            return Err(ArithError::ReverseDegree {
                d,
                deg: self.deg_t(),
            });
        }
        Ok(Self::new((0..=d).map(|i| self.coeff_t(d - i)).collect()))
    }

    /// Substitute `u = u0`, leaving a polynomial in `t`.
    pub fn specialize_u(&self, u0: &Rat) -> UniPoly {
        UniPoly::new(Var::T, self.rows.iter().map(|r| r.eval(u0)).collect())
    }

    /// Substitute `t = t0`, leaving a polynomial in `u`.
    pub fn specialize_t(&self, t0: &Rat) -> UniPoly {
        self.rows
            .iter()
            .rev()
            .fold(UniPoly::zero(Var::U), |acc, r| &acc.scale(t0) + r)
    }

    pub fn eval_point(&self, t0: &Rat, u0: &Rat) -> Rat {
        self.specialize_u(u0).eval(t0)
    }

    /// Divide every coefficient by `u − 1`; `None` unless the division is exact.
    pub fn div_u_minus_one(&self) -> Option<Self> {
        let d = UniPoly::from_ints(Var::U, &[-1, 1]);
        self.rows
            .iter()
            .map(|r| r.exact_div(&d))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Division in ℚ[u][t] by a divisor monic in `t`. Returns `(quotient, remainder)`
    /// with `deg_t(remainder) < deg_t(divisor)`.
    pub fn div_rem_monic(&self, divisor: &BiPoly) -> Result<(BiPoly, BiPoly), ArithError> {
        if !divisor.is_monic_t() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = divisor.deg_t() as usize;
        let mut rem = self.rows.clone();
        if rem.len() <= dd {
            return Ok((BiPoly::zero(), self.clone()));
        }
        let mut quot = vec![UniPoly::zero(Var::U); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.rows.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * d);
            }
            quot[i] = c;
        }
        Ok((BiPoly::new(quot), BiPoly::new(rem)))
    }

    fn zip_with(&self, other: &BiPoly, f: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        let zero = UniPoly::zero(Var::U);
        BiPoly::new(
            (0..n)
                .map(|i| {
                    f(
                        self.rows.get(i).unwrap_or(&zero),
                        other.rows.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    /// `1 − c·t` for a polynomial `c` in `u`; handy for building `(1−t)(1−ut)`.
    pub fn one_minus_t_times(c: UniPoly) -> Self {
        Self::new(vec![UniPoly::one(Var::U), -c])
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Integer matrix view, only valid when every coefficient is integral.
    pub fn to_int_matrix(&self) -> Result<Vec<Vec<i64>>, ArithError> {
        let width = (self.deg_u() + 1).max(0) as usize;
        self.rows
            .iter()
            .map(|r| (0..width).map(|k| super::rat_to_i64(&r.coeff(k))).collect())
            .collect()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.rows.iter().map(|r| -r).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(Var::U); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::new(rows)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(rat(c))
    }
}

impl fmt::Display for BiPoly {
    /// Ascending t-power, then ascending u-power inside each coefficient:
    /// `1 + (2 - u)*t + u*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            let tpow = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let nonzero: Vec<usize> = (0..row.coeffs().len())
                .filter(|&k| !row.coeff(k).is_zero())
                .collect();
            if i == 0 {
                for k in nonzero {
                    terms.push(write_monomial(&row.coeff(k), "u", k));
                }
            } else if nonzero.len() == 1 {
                let k = nonzero[0];
                let (neg, body) = write_monomial(&row.coeff(k), "u", k);
                let body = if body == "1" {
                    tpow
                } else {
                    format!("{body}*{tpow}")
                };
                terms.push((neg, body));
            } else {
                terms.push((false, format!("({row})*{tpow}")));
            }
        }
        f.write_str(&join_terms(terms))
    }
}
