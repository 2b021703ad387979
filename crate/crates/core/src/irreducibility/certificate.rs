use num_traits::Zero;
use serde_json::{json, Value};

use super::{factor_univariate, IrrError};
use crate::arith::{rat, rat_to_json, BiPoly, Rat, UniPoly, Var};
use crate::zeta2::PPoly;

/// Why a success over ℚ carries over to ℂ: a degree-1 polynomial stays
/// irreducible and a nonzero constant stays nonzero in every extension field.
pub const EXTENSION_EXPLANATION: &str = "degree_one_lead_and_nonzero_constant_are_field_independent";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    IrreducibleOverCOfU,
    Inconclusive,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::IrreducibleOverCOfU => "irreducible_over_C_of_u",
            Conclusion::Inconclusive => "inconclusive",
        }
    }
}

/// First condition that failed, or `AllConditionsHold`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    AllConditionsHold,
    NotMonic,
    /// `F` does not involve `u`, or its top `u`-coefficient is constant in `t`.
    DegenerateLead,
    /// Lead of degree ≥ 2 that is irreducible over ℚ; irreducibility over ℂ is not decided.
    LeadIrreducibleOverQOnly,
    LeadReducible,
    BetaZero,
    BetaNotConstant,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::AllConditionsHold => "all_conditions_hold",
            Reason::NotMonic => "not_monic",
            Reason::DegenerateLead => "degenerate_lead",
            Reason::LeadIrreducibleOverQOnly => "lead_irreducible_over_Q_only",
            Reason::LeadReducible => "lead_reducible",
            Reason::BetaZero => "beta_zero",
            Reason::BetaNotConstant => "beta_not_constant",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub f: BiPoly,
    pub monic: bool,
    /// Coefficient of `u^{deg_u F}` in `F`, a polynomial in `t`.
    pub lead: UniPoly,
    pub alpha: Rat,
    /// `F(u, α)` as a polynomial in `u`.
    pub beta: UniPoly,
    pub conclusion: Conclusion,
    pub reason: Reason,
    /// Set by [`certify_p`]: `P(0,u) = 1`, so the result for `F` holds for `P`.
    pub p0_is_one: Option<bool>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.conclusion == Conclusion::IrreducibleOverCOfU
    }

    /// `β` when it is constant in `u`.
    pub fn beta_value(&self) -> Option<Rat> {
        self.beta.as_constant()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "F": self.f.to_json(),
            "monic": self.monic,
            "lead": self.lead.coeffs().iter().map(rat_to_json).collect::<Vec<_>>(),
            "alpha": self.alpha.to_string(),
            "beta": self.beta.to_string(),
            "conclusion": self.conclusion.as_str(),
            "reason": self.reason.as_str(),
            "explanation": EXTENSION_EXPLANATION,
        });
        if let Some(x) = self.p0_is_one {
            v["p0_is_one"] = json!(x);
        }
        v
    }
}

/// Checks the irreducibility criterion for `F` at `t = α`:
///
/// 1. `F` is monic in `t`;
/// 2. the coefficient of `u^{deg_u F}` in `F` is irreducible in `t` (accepted when of degree 1);
/// 3. `F(u, α)` is a nonzero constant.
///
/// Every failure is reported as `Inconclusive` with the first failing reason.
pub fn irrcrit_certificate(f: &BiPoly, alpha: &Rat) -> Certificate {
    let monic = !f.is_zero() && f.is_monic_t();
    let du = f.deg_u();
    let lead = if du >= 0 {
        f.coeff_u(du as usize)
    } else {
        UniPoly::zero(Var::T)
    };
    let beta = f.specialize_t(alpha);

    let lead_reason = if du <= 0 || lead.degree() <= 0 {
        Some(Reason::DegenerateLead)
    } else if lead.degree() == 1 {
        None
    } else {
        match factor_univariate(&lead) {
            Ok(parts) if parts.len() == 1 && parts[0].1 == 1 => Some(Reason::LeadIrreducibleOverQOnly),
            Ok(_) => Some(Reason::LeadReducible),
            Err(_) => Some(Reason::LeadIrreducibleOverQOnly),
        }
    };
    let beta_reason = match beta.as_constant() {
        None => Some(Reason::BetaNotConstant),
        Some(b) if b.is_zero() => Some(Reason::BetaZero),
        Some(_) => None,
    };
    let reason = if !monic {
        Reason::NotMonic
    } else {
        lead_reason.or(beta_reason).unwrap_or(Reason::AllConditionsHold)
    };
    let conclusion = if reason == Reason::AllConditionsHold {
        Conclusion::IrreducibleOverCOfU
    } else {
        Conclusion::Inconclusive
    };
    Certificate {
        f: f.clone(),
        monic,
        lead,
        alpha: alpha.clone(),
        beta,
        conclusion,
        reason,
        p0_is_one: None,
    }
}

/// Certificate for `P` from its reversal `t^{2g}P(1/t,u)` at `α = 1`.
///
/// On success the lead must be exactly `1 − t` and `β = h`; a mismatch is an
/// assertion error rather than an inconclusive result.
pub fn certify_p(p: &PPoly) -> Result<Certificate, IrrError> {
    let g = p.genus();
    if g == 0 {
        return Err(IrrError::GenusZero);
    }
    let f = p.poly().reverse_t(2 * g)?;
    let mut cert = irrcrit_certificate(&f, &rat(1));
    if f.deg_t() != 2 * g as isize && cert.is_certified() {
        return Err(IrrError::Assertion(format!("deg_t F = {} != {}", f.deg_t(), 2 * g)));
    }
    cert.p0_is_one = Some(p.poly().coeff_t(0) == UniPoly::one(Var::U));
    if cert.is_certified() {
        if cert.p0_is_one != Some(true) {
            return Err(IrrError::Assertion("P(0,u) != 1".into()));
        }
        let one_minus_t = UniPoly::from_ints(Var::T, &[1, -1]);
        if cert.lead != one_minus_t {
            return Err(IrrError::Assertion(format!("lead = {} != 1 - t", cert.lead)));
        }
        if cert.beta_value() != Some(rat(p.h())) {
            return Err(IrrError::Assertion(format!("beta = {} != h = {}", cert.beta, p.h())));
        }
    }
    Ok(cert)
}

/// `b + a(q+1) + q² + 1 = 0`, the necessary condition for the genus-2 `P` to factor.
/// The left side is `L(1) = h`, so this never holds for an actual curve.
pub fn g2_reducibility_condition(q: i64, a: i64, b: i64) -> bool {
    b + a * (q + 1) + q * q + 1 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::factor_oracle;
    use crate::zeta2::{p_explicit, CurveParams};

    fn m(rows: &[&[i64]]) -> BiPoly {
        BiPoly::from_int_matrix(rows)
    }

    #[test]
    fn criterion_examples() {
        let ok = irrcrit_certificate(&m(&[&[0, 1], &[2, -1], &[1]]), &rat(1));
        assert!(ok.is_certified());
        assert_eq!(ok.lead, UniPoly::from_ints(Var::T, &[1, -1]));
        assert_eq!(ok.beta_value(), Some(rat(3)));

        let zero = irrcrit_certificate(&m(&[&[0, 1], &[-1, -1], &[1]]), &rat(1));
        assert_eq!((zero.conclusion, zero.reason), (Conclusion::Inconclusive, Reason::BetaZero));

        let t2 = irrcrit_certificate(&BiPoly::t().pow(2), &rat(1));
        assert_eq!(t2.reason, Reason::DegenerateLead);
    }

    #[test]
    fn other_failure_reasons() {
        assert_eq!(irrcrit_certificate(&m(&[&[0, 1], &[1], &[2]]), &rat(1)).reason, Reason::NotMonic);
        assert_eq!(irrcrit_certificate(&BiPoly::zero(), &rat(1)).reason, Reason::NotMonic);
        // lead t² + 1 in u·(t² + 1) + t³: irreducible over ℚ only
        let f = m(&[&[0, 1], &[], &[0, 1], &[1]]);
        assert_eq!(irrcrit_certificate(&f, &rat(1)).reason, Reason::LeadIrreducibleOverQOnly);
        // lead t² − 1
        let f = m(&[&[0, -1], &[], &[0, 1], &[1]]);
        assert_eq!(irrcrit_certificate(&f, &rat(1)).reason, Reason::LeadReducible);
        // u·(1 − t) + t²: F(u, 2) = −u + 4
        let f = m(&[&[0, 1], &[0, -1], &[1]]);
        assert_eq!(irrcrit_certificate(&f, &rat(2)).reason, Reason::BetaNotConstant);
        // constant lead in t: u + t²
        assert_eq!(irrcrit_certificate(&m(&[&[0, 1], &[], &[1]]), &rat(1)).reason, Reason::DegenerateLead);
    }

    #[test]
    fn certify_genuine_inputs() {
        let c = certify_p(&p_explicit(CurveParams::Genus1 { q: 2, n: 3 }, false).unwrap()).unwrap();
        assert!(c.is_certified());
        assert_eq!(c.beta_value(), Some(rat(3)));
        assert_eq!(c.p0_is_one, Some(true));
        let c = certify_p(&p_explicit(CurveParams::Genus2 { q: 2, a: 0, b: 0 }, false).unwrap()).unwrap();
        assert!(c.is_certified());
        assert_eq!(c.lead, UniPoly::from_ints(Var::T, &[1, -1]));
        assert_eq!(c.beta_value(), Some(rat(5)));
        let j = c.to_json();
        assert_eq!(j["alpha"], "1");
        assert_eq!(j["beta"], "5");
        assert_eq!(j["lead"], json!([1, -1]));
        assert_eq!(j["conclusion"], "irreducible_over_C_of_u");
    }

    #[test]
    fn negative_controls() {
        let p = p_explicit(CurveParams::Genus1 { q: 2, n: 0 }, true).unwrap();
        let c = certify_p(&p).unwrap();
        assert_eq!((c.conclusion, c.reason), (Conclusion::Inconclusive, Reason::BetaZero));
        let fac = factor_oracle(&c.f).unwrap();
        assert_eq!(fac.factorization().unwrap().count(), 2);

        assert!(g2_reducibility_condition(2, 0, -5));
        let p = p_explicit(CurveParams::Genus2 { q: 2, a: 0, b: -5 }, true).unwrap();
        let c = certify_p(&p).unwrap();
        assert_eq!(c.beta_value(), Some(rat(0)));
        assert_eq!(c.conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn reducibility_condition() {
        assert!(!g2_reducibility_condition(2, 0, 0));
        assert!(!g2_reducibility_condition(3, -2, 2));
        assert_eq!(certify_p(&p_explicit(CurveParams::Genus0 { q: 2 }, false).unwrap()), Err(IrrError::GenusZero));
    }
}
