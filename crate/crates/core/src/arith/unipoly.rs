use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, ArithError, Rat};

/// Variable tag of a univariate polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    U,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::U => "u",
        }
    }
}

/// Dense univariate polynomial over ℚ.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are stripped on
/// construction, so the zero polynomial has an empty coefficient vector and
/// degree −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<Rat>) -> Self {
        let mut p = Self { var, coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Self {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(var: Var, c: Rat, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Self { var, coeffs }
    }

    /// The polynomial `x` itself.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, Rat::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, different variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rat> {
        self.is_constant().then(|| self.coeff(0))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self {
            var: self.var,
            coeffs,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(super::is_integer)
    }

    /// Divide by a monic version of itself, i.e. scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rat::one() / lc))
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        debug_assert_eq!(self.var, divisor.var);
        let dd = divisor.degree() as usize;
        let lc_inv = Rat::one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((UniPoly::new(self.var, quot), UniPoly::new(self.var, rem)))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    fn zip_with(&self, other: &UniPoly, f: impl Fn(&Rat, &Rat) -> Rat) -> UniPoly {
        debug_assert_eq!(self.var, other.var, "variable mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        UniPoly::new(self.var, coeffs)
    }
}

/// `(u^k − 1)/(u − 1) = 1 + u + … + u^{k−1}`; zero for `k = 0`.
pub fn gauss_poly(k: usize) -> UniPoly {
    UniPoly::new(Var::U, vec![Rat::one(); k])
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Writes `c*x^k` with the sign stripped; returns whether the coefficient was negative.
pub(crate) fn write_monomial(c: &Rat, var: &str, k: usize) -> (bool, String) {
    let neg = c.is_negative();
    let mag = c.abs();
    let power = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    let body = if k == 0 {
        mag.to_string()
    } else if mag.is_one() {
        power
    } else {
        format!("{mag}*{power}")
    };
    (neg, body)
}

/// Joins signed terms as `a + b - c`, with a leading `-` when the first term is negative.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, body) in terms {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UniPoly {
    /// Ascending powers with explicit signs, e.g. `2 - u + u^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.var.name();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| write_monomial(c, name, k));
        f.write_str(&join_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::U, c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = u(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(u(&[0, 0]).degree(), -1);
        assert!(u(&[]).is_zero());
    }

    #[test]
    fn gauss_poly_values() {
        assert!(gauss_poly(0).is_zero());
        assert_eq!(gauss_poly(1), u(&[1]));
        assert_eq!(gauss_poly(3), u(&[1, 1, 1]));
        // (u^k - 1) = (u - 1) * [k]_u
        for k in 0..6 {
            let mut lhs = vec![0i64; k + 1];
            lhs[0] = -1;
            lhs[k] += 1;
            assert_eq!(&u(&[-1, 1]) * &gauss_poly(k), u(&lhs));
        }
    }

    #[test]
    fn division() {
        let a = u(&[-1, 0, 1]);
        let (q, r) = a.div_rem(&u(&[-1, 1])).unwrap();
        assert_eq!(q, u(&[1, 1]));
        assert!(r.is_zero());
        assert!(u(&[1, 0, 1]).exact_div(&u(&[-1, 1])).is_none());
        assert_eq!(a.div_rem(&UniPoly::zero(Var::U)), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(u(&[2, -1]).to_string(), "2 - u");
        assert_eq!(u(&[0, -1, 3]).to_string(), "-u + 3*u^2");
        assert_eq!(u(&[]).to_string(), "0");
        let half = UniPoly::new(Var::T, vec![Rat::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn eval_horner() {
        assert_eq!(u(&[1, 2, 3]).eval(&rat(2)), rat(17));
    }
}
