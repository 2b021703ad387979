use serde_json::json;

use super::{BTable, CheckReport, PPoly, ZetaError};
use crate::arith::rat_to_i64;

/// Coefficients `α_{ik}` of `P_i(u) = Σ_k α_{ik} u^k`, `0 ≤ i ≤ 2g`, `0 ≤ k ≤ g`.
/// Reads outside that box (including negative `k`) return 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaMatrix {
    g: usize,
    rows: Vec<Vec<i64>>,
}

impl AlphaMatrix {
    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn get(&self, i: i64, k: i64) -> i64 {
        if i < 0 || k < 0 {
            return 0;
        }
        self.rows
            .get(i as usize)
            .and_then(|r| r.get(k as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }
}

/// Extracts `α_{ik}`; enforces `α_{00} = 1` and `α_{ik} = 0` for `k > ⌊i/2⌋ + 1`.
pub fn alpha_matrix(p: &PPoly) -> Result<AlphaMatrix, ZetaError> {
    let g = p.genus();
    let poly = p.poly();
    let mut rows = vec![vec![0i64; g + 1]; 2 * g + 1];
    for (i, row) in poly.rows().iter().enumerate() {
        for (k, c) in row.coeffs().iter().enumerate() {
            let v = rat_to_i64(c)?;
            if v == 0 {
                continue;
            }
            if k > i / 2 + 1 || i > 2 * g || k > g {
                return Err(ZetaError::DegreeBound { i, k });
            }
            rows[i][k] = v;
        }
    }
    if rows[0][0] != 1 {
        return Err(ZetaError::Invariant(format!("alpha_00 = {} != 1", rows[0][0])));
    }
    Ok(AlphaMatrix { g, rows })
}

/// `b_{νμ} = Σ_{i=0}^{ν} (α_{i, μ−ν−1+i} − α_{i,μ})`.
pub fn b_from_alpha(a: &AlphaMatrix, nu: usize, mu: usize) -> i64 {
    assert!(mu >= 1, "mu must be >= 1");
    let (nu, mu) = (nu as i64, mu as i64);
    (0..=nu)
        .map(|i| a.get(i, mu - nu - 1 + i) - a.get(i, mu))
        .sum()
}

/// `Σ_{k ≥ α+1} b_{νk}` computed from the table.
fn cumulative_b(bt: &BTable, nu: usize, alpha: usize) -> i64 {
    bt.row(nu)
        .into_iter()
        .filter(|&(k, _)| k > alpha)
        .map(|(_, b)| b)
        .sum()
}

/// `Σ_{μ,i ≥ 0, μ+i ≤ ν} α_{i, α−μ}`.
fn cumulative_alpha(a: &AlphaMatrix, nu: usize, alpha: usize) -> i64 {
    let (nu, alpha) = (nu as i64, alpha as i64);
    (0..=nu)
        .flat_map(|mu| (0..=nu - mu).map(move |i| (mu, i)))
        .map(|(mu, i)| a.get(i, alpha - mu))
        .sum()
}

/// Checks both forms of the coefficient identity between the table and `α`:
///
/// * `LEMMA-cumulative`: `Σ_{k≥α+1} b_{νk} = Σ_{μ+i≤ν} α_{i,α−μ}` for `ν ≤ nu_max`, `α ≤ alpha_max`;
/// * `LEMMA-pointwise`: `b_from_alpha(ν, μ) = b_{νμ}` for `ν ≤ nu_max`,
///   `1 ≤ μ ≤ max(alpha_max + 1, ν + 2)`.
///
/// Tail entries are included. Failures list `(ν, α or μ, table side, α side)`.
pub fn cumulative_identity_check(
    a: &AlphaMatrix,
    bt: &BTable,
    nu_max: usize,
    alpha_max: usize,
) -> CheckReport {
    let mut cumulative = Vec::new();
    let mut pointwise = Vec::new();
    for nu in 0..=nu_max {
        for alpha in 0..=alpha_max {
            let (lhs, rhs) = (cumulative_b(bt, nu, alpha), cumulative_alpha(a, nu, alpha));
            if lhs != rhs {
                cumulative.push(json!({"nu": nu, "alpha": alpha, "b_side": lhs, "alpha_side": rhs}));
            }
        }
        for mu in 1..=(alpha_max + 1).max(nu + 2) {
            let (lhs, rhs) = (bt.get(nu, mu), b_from_alpha(a, nu, mu));
            if lhs != rhs {
                pointwise.push(json!({"nu": nu, "mu": mu, "b_side": lhs, "alpha_side": rhs}));
            }
        }
    }
    let mut report = CheckReport::new();
    report.record("LEMMA-cumulative", cumulative.is_empty(), || json!(cumulative));
    report.record("LEMMA-pointwise", pointwise.is_empty(), || json!(pointwise));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BiPoly;
    use crate::zeta2::{btable_structural, p_explicit, p_from_btable, CurveParams, PContext};

    fn g1_alpha() -> AlphaMatrix {
        alpha_matrix(&p_explicit(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap()).unwrap()
    }

    #[test]
    fn extraction() {
        let a = g1_alpha();
        assert_eq!(a.rows(), &[vec![1, 0], vec![2, -1], vec![0, 1]]);
        assert_eq!(a.get(0, -1), 0);
        assert_eq!(a.get(5, 0), 0);
        let g0 = alpha_matrix(&p_explicit(CurveParams::Genus0 { q: 2 }, false).unwrap()).unwrap();
        assert_eq!(g0.rows(), &[vec![1]]);
    }

    #[test]
    fn degree_bound_violation_has_witness() {
        // P_0 = 1 + u^2 exceeds deg_u P_0 <= 1.
        let p = PPoly::unchecked(
            BiPoly::from_int_matrix(&[&[1, 0, 1][..], &[1, -1], &[0, 1]]),
            PContext { g: 1, q: 2, h: 3, l: None },
        );
        assert_eq!(alpha_matrix(&p), Err(ZetaError::DegreeBound { i: 0, k: 2 }));
    }

    #[test]
    fn pointwise_formula_values() {
        let a = g1_alpha();
        assert_eq!(b_from_alpha(&a, 0, 1), 1);
        assert_eq!(b_from_alpha(&a, 1, 1), 3);
        let a2 = alpha_matrix(&p_explicit(CurveParams::Genus2 { q: 2, a: 0, b: 0 }, false).unwrap()).unwrap();
        assert_eq!(a2.get(0, 0) + a2.get(1, 1), 0);
        assert_eq!(b_from_alpha(&a2, 1, 2), 0);
        assert_eq!(b_from_alpha(&a2, 2, 3), 0);
    }

    #[test]
    fn cumulative_identity() {
        let bt = btable_structural(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap();
        let a = g1_alpha();
        // (ν, α) = (1, 0): b_11 = 3 = α_00 + α_10 + α_{0,-1}
        assert_eq!(cumulative_b(&bt, 1, 0), 3);
        assert_eq!(cumulative_alpha(&a, 1, 0), 3);
        assert!(cumulative_identity_check(&a, &bt, 6, 6).all_pass());

        let bt0 = btable_structural(CurveParams::Genus0 { q: 3 }, false).unwrap();
        let a0 = alpha_matrix(&p_from_btable(&bt0).unwrap()).unwrap();
        assert!(cumulative_identity_check(&a0, &bt0, 4, 6).all_pass());

        let bt2 = btable_structural(CurveParams::Genus2 { q: 2, a: 0, b: 0 }, false).unwrap();
        let a2 = alpha_matrix(&p_from_btable(&bt2).unwrap()).unwrap();
        assert!(cumulative_identity_check(&a2, &bt2, 6, 6).all_pass());
    }

    #[test]
    fn mismatched_table_is_reported() {
        let a = g1_alpha();
        let other = btable_structural(CurveParams::Genus1 { q: 2, n: 4 }, false).unwrap();
        let r = cumulative_identity_check(&a, &other, 3, 3);
        assert!(!r.passed("LEMMA-cumulative"));
        assert!(!r.passed("LEMMA-pointwise"));
        let w = r.get("LEMMA-pointwise").unwrap().witness.as_ref().unwrap();
        assert_eq!(w[0], json!({"nu": 1, "mu": 1, "b_side": 4, "alpha_side": 3}));
    }
}
