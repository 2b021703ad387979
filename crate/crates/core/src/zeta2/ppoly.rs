use num_traits::One;

use super::{BTable, CurveParams, ZetaError};
use crate::arith::{gauss_poly, rat, BiPoly, UniPoly, Var};
use crate::curves::LPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PContext {
    pub g: usize,
    pub q: i64,
    pub h: i64,
    pub l: Option<LPoly>,
}

/// Numerator `P(t,u)` of the two-variable zeta function together with the
/// curve data it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    poly: BiPoly,
    ctx: PContext,
}

impl PPoly {
    /// Checks integrality, `deg_t = 2g`, `deg_u = g` and `P(0,u) = 1`.
    pub fn new(poly: BiPoly, ctx: PContext) -> Result<Self, ZetaError> {
        if !poly.is_integral() {
            return Err(ZetaError::Invariant("non-integral coefficient".into()));
        }
        let g = ctx.g as isize;
        if poly.deg_t() != 2 * g || poly.deg_u() != g {
            return Err(ZetaError::Invariant(format!(
                "deg_t = {}, deg_u = {} (expected {}, {g})",
                poly.deg_t(),
                poly.deg_u(),
                2 * g
            )));
        }
        if poly.coeff_t(0) != UniPoly::one(Var::U) {
            return Err(ZetaError::Invariant(format!("P_0 = {} != 1", poly.coeff_t(0))));
        }
        Ok(Self { poly, ctx })
    }

    /// Wraps an arbitrary polynomial without validation, for feeding
    /// deliberately broken input to the checkers.
    pub fn unchecked(poly: BiPoly, ctx: PContext) -> Self {
        Self { poly, ctx }
    }

    pub fn with_l(mut self, l: LPoly) -> Self {
        self.ctx.l = Some(l);
        self
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn context(&self) -> &PContext {
        &self.ctx
    }

    pub fn genus(&self) -> usize {
        self.ctx.g
    }

    pub fn h(&self) -> i64 {
        self.ctx.h
    }
}

/// `P = (1−t)(1−ut)·Σ_{n<n₀} z_n(u)tⁿ + h·[u^{1−g}(ut)^{n₀}(1−t) − t^{n₀}(1−ut)]/(u−1)`
/// with `z_n = Σ_k b_{nk}·[k]_u` and `n₀ = max(2g−1, 1)`. The tail of the
/// series is summed in closed form; the division by `u − 1` must be exact.
pub fn p_from_btable(bt: &BTable) -> Result<PPoly, ZetaError> {
    let g = bt.genus();
    let n0 = bt.tail_start();
    let head = BiPoly::new(
        (0..n0)
            .map(|n| {
                bt.row(n).into_iter().fold(UniPoly::zero(Var::U), |acc, (k, b)| {
                    &acc + &gauss_poly(k).scale(&rat(b))
                })
            })
            .collect(),
    );
    let one_minus_t = BiPoly::one_minus_t_times(UniPoly::one(Var::U));
    let one_minus_ut = BiPoly::one_minus_t_times(UniPoly::x(Var::U));
    // u^{1−g}·u^{n₀} has exponent n₀ + 1 − g ≥ 0 since n₀ ≥ 2g − 1.
    let u_exp = n0 + 1 - g;
    let numerator = &(&one_minus_t.shift_u(u_exp) - &one_minus_ut).shift_t(n0);
    let tail = numerator
        .div_u_minus_one()
        .ok_or(ZetaError::InexactDivision)?;
    let poly = &(&(&one_minus_t * &one_minus_ut) * &head) + &tail.scale(&rat(bt.h()));
    PPoly::new(
        poly,
        PContext {
            g,
            q: bt.q(),
            h: bt.h(),
            l: None,
        },
    )
}

/// The closed forms for genus 1 and 2 written out coefficient by coefficient:
///
/// * `g = 1`: `1 + (N − 1 − u)t + ut²`
/// * `g = 2`: `1 + ((a+q) − u)t + ((q(q−1) + aq + b) − (a+q−1)u)t² + ((a+q) − u)ut³ + u²t⁴`
///
/// and `P = 1` for `g = 0`. The context carries `L(t)` built from the same parameters.
pub fn p_explicit(params: CurveParams, synthetic: bool) -> Result<PPoly, ZetaError> {
    params.validate(synthetic)?;
    let poly = match params {
        CurveParams::Genus0 { .. } => BiPoly::one(),
        CurveParams::Genus1 { n, .. } => BiPoly::from_int_matrix(&[&[1][..], &[n - 1, -1], &[0, 1]]),
        CurveParams::Genus2 { q, a, b } => BiPoly::from_int_matrix(&[
            &[1][..],
            &[a + q, -1],
            &[q * (q - 1) + a * q + b, -(a + q - 1)],
            &[0, a + q, -1],
            &[0, 0, 1],
        ]),
    };
    debug_assert!(poly.coeff(0, 0).is_one());
    let l = params
        .l_poly()
        .map_err(|e| ZetaError::Invariant(e.to_string()))?;
    PPoly::new(
        poly,
        PContext {
            g: params.genus(),
            q: params.q(),
            h: params.h(),
            l: Some(l),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta2::btable_structural;

    fn m(rows: &[&[i64]]) -> BiPoly {
        BiPoly::from_int_matrix(rows)
    }

    #[test]
    fn genus_one_assembly() {
        let bt = btable_structural(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap();
        let p = p_from_btable(&bt).unwrap();
        assert_eq!(p.poly(), &m(&[&[1], &[2, -1], &[0, 1]]));
        assert_eq!(p.poly().to_string(), "1 + (2 - u)*t + u*t^2");
    }

    #[test]
    fn genus_two_assembly() {
        let params = CurveParams::Genus2 { q: 2, a: 0, b: 0 };
        let p = p_from_btable(&btable_structural(params, false).unwrap()).unwrap();
        let expected = m(&[&[1], &[2, -1], &[2, -1], &[0, 2, -1], &[0, 0, 1]]);
        assert_eq!(p.poly(), &expected);
        assert_eq!(p_explicit(params, false).unwrap().poly(), &expected);
    }

    #[test]
    fn genus_zero_assembly() {
        let p = p_from_btable(&btable_structural(CurveParams::Genus0 { q: 3 }, false).unwrap()).unwrap();
        assert_eq!(p.poly(), &BiPoly::one());
        assert_eq!(p_explicit(CurveParams::Genus0 { q: 3 }, false).unwrap().poly(), &BiPoly::one());
    }

    #[test]
    fn reducible_boundary() {
        let p = p_explicit(CurveParams::Genus1 { q: 2, n: 0 }, true).unwrap();
        let factors = &BiPoly::one_minus_t_times(UniPoly::one(Var::U))
            * &BiPoly::one_minus_t_times(UniPoly::x(Var::U));
        assert_eq!(p.poly(), &factors);
        let bt = btable_structural(CurveParams::Genus1 { q: 2, n: 0 }, true).unwrap();
        assert_eq!(p_from_btable(&bt).unwrap().poly(), &factors);
    }

    #[test]
    fn inconsistent_table_breaks_invariants() {
        // A second degree-0 class with h0 = 2 makes P_0 = 2 + u.
        let bt = BTable::new(1, 2, 3, [((0, 1), 1), ((0, 2), 1)], true).unwrap();
        assert!(matches!(p_from_btable(&bt), Err(ZetaError::Invariant(_))));
    }

    #[test]
    fn ppoly_invariants() {
        let ctx = PContext { g: 1, q: 2, h: 3, l: None };
        assert!(PPoly::new(m(&[&[1], &[2, -1], &[0, 0, 1]]), ctx.clone()).is_err());
        assert!(PPoly::new(m(&[&[2], &[2, -1], &[0, 1]]), ctx.clone()).is_err());
        assert!(PPoly::new(m(&[&[1], &[2, -1], &[0, 1]]), ctx).is_ok());
    }
}
