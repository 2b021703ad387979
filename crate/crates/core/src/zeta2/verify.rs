use num_traits::Zero;
use serde_json::json;

use super::{BTable, CheckReport, PPoly};
use crate::arith::{rat, UniPoly, Var};

/// Structural properties of `P(t,u)`:
///
/// | id | property |
/// |----|----------|
/// | `T1-deg` | `deg_t P = 2g`, `deg_u P = g` |
/// | `T1-P0` | `P_0(u) = 1` |
/// | `T1-bound` | `deg_u P_i ≤ ⌊i/2⌋ + 1` |
/// | `T1-FE` | `P_{2g−i}(u) = u^{g−i} P_i(u)` for `0 ≤ i ≤ g` |
/// | `T1-h` | `P(1,u) = h`, pointwise at `u ∈ {0,1,2,3}` and as a polynomial |
/// | `T1-spec` | `P(t,q) = L(t)` (only when `L` is in the context) |
/// | `P12` | `α_11 = −1`, `deg_u P_1 = 1`; for `g ≥ 2` also `α_22 = 0` (`g ≥ 1` only) |
/// | `LEAD` | coefficient of `u^g` in `t^{2g}P(1/t,u)` is `1 − t` (`g ≥ 1` only) |
pub fn verify_theorem1(p: &PPoly) -> CheckReport {
    let poly = p.poly();
    let ctx = p.context();
    let g = ctx.g;
    let mut r = CheckReport::new();

    let (dt, du) = (poly.deg_t(), poly.deg_u());
    r.record("T1-deg", dt == 2 * g as isize && du == g as isize, || {
        json!({"deg_t": dt, "deg_u": du, "expected": [2 * g, g]})
    });

    let p0 = poly.coeff_t(0);
    r.record("T1-P0", p0 == UniPoly::one(Var::U), || json!({"P0": p0.to_string()}));

    let over: Vec<_> = poly
        .rows()
        .iter()
        .enumerate()
        .filter(|(i, row)| row.degree() > (i / 2 + 1) as isize)
        .map(|(i, row)| json!({"i": i, "deg_u": row.degree(), "bound": i / 2 + 1}))
        .collect();
    r.record("T1-bound", over.is_empty(), || json!(over));

    let fe_fail: Vec<_> = (0..=g)
        .filter(|&i| poly.coeff_t(2 * g - i) != poly.coeff_t(i).shift(g - i))
        .map(|i| {
            json!({
                "i": i,
                "P_2g-i": poly.coeff_t(2 * g - i).to_string(),
                "u^(g-i)*P_i": poly.coeff_t(i).shift(g - i).to_string(),
            })
        })
        .collect();
    r.record("T1-FE", fe_fail.is_empty(), || json!(fe_fail));

    let h = rat(ctx.h);
    let at_one = poly.specialize_t(&rat(1));
    let pointwise_bad: Vec<_> = (0..=3)
        .map(|u0| (u0, poly.eval_point(&rat(1), &rat(u0))))
        .filter(|(_, v)| *v != h)
        .map(|(u0, v)| json!({"u": u0, "P(1,u)": v.to_string()}))
        .collect();
    let symbolic_ok = at_one.as_constant().is_some_and(|c| c == h);
    r.record("T1-h", pointwise_bad.is_empty() && symbolic_ok, || {
        json!({"h": ctx.h, "P(1,u)": at_one.to_string(), "pointwise": pointwise_bad})
    });

    if let Some(l) = &ctx.l {
        let spec = poly.specialize_u(&rat(ctx.q));
        r.record("T1-spec", &spec == l.poly(), || {
            json!({"P(t,q)": spec.to_string(), "L": l.poly().to_string()})
        });
    }

    if g >= 1 {
        let p1 = poly.coeff_t(1);
        let p2 = poly.coeff_t(2);
        let a11 = p1.coeff(1);
        let mut ok = p1.degree() == 1 && a11 == rat(-1);
        if g >= 2 {
            ok &= p2.coeff(2).is_zero() && p2.degree() <= 1;
        }
        r.record("P12", ok, || {
            json!({"P1": p1.to_string(), "P2": p2.to_string(), "alpha11": a11.to_string(),
                   "alpha22": p2.coeff(2).to_string()})
        });

        let expected = UniPoly::from_ints(Var::T, &[1, -1]);
        match poly.reverse_t(2 * g) {
            Ok(rev) => {
                let lead = rev.coeff_u(g);
                let top_ok = rev.deg_u() == g as isize;
                r.record("LEAD", lead == expected && top_ok, || {
                    json!({"coeff_u^g": lead.to_string(), "deg_u": rev.deg_u()})
                });
            }
            Err(e) => r.record("LEAD", false, || json!({"error": e.to_string()})),
        }
    }
    r
}

/// Clifford's bound on the census: for `1 ≤ n ≤ 2g−2`, a nonzero `b_{nk}` with
/// `k ≥ 2` needs `2(k−1) ≤ n` (`CLIFF-special`), and degree 0 only has `k = 1`
/// (`CLIFF-deg0`).
pub fn clifford_validate(bt: &BTable) -> CheckReport {
    let g = bt.genus();
    let special_end = (2 * g).saturating_sub(2);
    let mut violations = Vec::new();
    for n in 1..=special_end {
        for (k, b) in bt.row(n) {
            if k >= 2 && b != 0 && 2 * (k - 1) > n {
                violations.push(json!({"n": n, "k": k, "b": b}));
            }
        }
    }
    let deg0: Vec<_> = bt
        .row(0)
        .into_iter()
        .filter(|&(k, b)| k >= 2 && b != 0)
        .map(|(k, b)| json!({"n": 0, "k": k, "b": b}))
        .collect();
    let mut r = CheckReport::new();
    r.record("CLIFF-special", violations.is_empty(), || json!(violations));
    r.record("CLIFF-deg0", deg0.is_empty(), || json!(deg0));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BiPoly;
    use crate::curves::LPoly;
    use crate::zeta2::{btable_structural, p_explicit, CurveParams, PContext};

    #[test]
    fn genus_one_passes() {
        let p = p_explicit(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap();
        assert_eq!(p.context().l.as_ref().unwrap().poly(), &UniPoly::from_ints(Var::T, &[1, 0, 2]));
        let r = verify_theorem1(&p);
        assert!(r.all_pass(), "{:?}", r);
        let ids: Vec<_> = r.ids().collect();
        assert_eq!(ids, ["T1-deg", "T1-P0", "T1-bound", "T1-FE", "T1-h", "T1-spec", "P12", "LEAD"]);
    }

    #[test]
    fn genus_two_passes() {
        let p = p_explicit(CurveParams::Genus2 { q: 2, a: 0, b: 0 }, false).unwrap();
        assert_eq!(p.poly().coeff_t(3), p.poly().coeff_t(1).shift(1));
        assert_eq!(p.poly().coeff_t(4), UniPoly::monomial(Var::U, rat(1), 2));
        assert!(verify_theorem1(&p).all_pass());
    }

    #[test]
    fn genus_zero_registers_fewer_checks() {
        let p = p_explicit(CurveParams::Genus0 { q: 2 }, false).unwrap();
        let r = verify_theorem1(&p);
        assert!(r.all_pass());
        assert!(r.get("LEAD").is_none() && r.get("P12").is_none());
    }

    #[test]
    fn tampered_polynomial_fails_with_witnesses() {
        let poly = BiPoly::from_int_matrix(&[&[1][..], &[2, -1], &[0, 0, 1]]);
        let ctx = PContext {
            g: 1,
            q: 2,
            h: 3,
            l: Some(LPoly::new(2, 1, &[1, 0, 2]).unwrap()),
        };
        let r = verify_theorem1(&PPoly::unchecked(poly, ctx));
        assert!(!r.passed("T1-deg"));
        assert!(!r.passed("T1-FE"));
        assert!(r.get("T1-deg").unwrap().witness.is_some());
        assert_eq!(r.get("T1-FE").unwrap().witness.as_ref().unwrap()[0]["i"], 0);
        assert!(r.passed("T1-P0"));
    }

    #[test]
    fn wrong_class_number_is_caught() {
        let p = p_explicit(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap();
        let mut ctx = p.context().clone();
        ctx.h = 4;
        let r = verify_theorem1(&PPoly::unchecked(p.poly().clone(), ctx));
        assert!(!r.passed("T1-h"));
    }

    #[test]
    fn clifford() {
        for (a, b) in [(0, 0), (-1, 2), (2, 3)] {
            let bt = btable_structural(CurveParams::Genus2 { q: 3, a, b }, false).unwrap();
            assert!(clifford_validate(&bt).all_pass());
        }
        let bad = BTable::new(2, 2, 5, [((0, 1), 1), ((1, 2), 1)], true).unwrap();
        let r = clifford_validate(&bad);
        assert!(!r.passed("CLIFF-special"));
        assert_eq!(
            r.get("CLIFF-special").unwrap().witness,
            Some(json!([{"n": 1, "k": 2, "b": 1}]))
        );
        let g1 = btable_structural(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap();
        assert!(clifford_validate(&g1).all_pass());
    }
}
