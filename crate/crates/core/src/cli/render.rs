use std::fmt::Write;

use serde_json::{json, Value};

use super::Computed;
use crate::arith::BiPoly;
use crate::irreducibility::{Certificate, OracleOutcome};
use crate::zeta2::CheckReport;

/// Pretty JSON with a trailing newline. Object keys come out sorted.
pub(crate) fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

/// `1 + (2 - u)*t + u*t^2` becomes `1 + (2 - u)t + ut^{2}`.
pub fn to_latex(p: &BiPoly) -> String {
    let text = p.to_string().replace('*', "");
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

pub(crate) fn poly_json(p: &BiPoly) -> Value {
    json!({"text": p.to_string(), "latex": to_latex(p), "matrix": p.to_json()})
}

fn describe_source(c: &Computed) -> String {
    match &c.curve {
        Some(curve) => format!("{:?} curve over F_{}", curve.kind(), curve.q()),
        None => match c.params {
            Some(params) => format!("parameters {params:?}"),
            None => "b-table".to_string(),
        },
    }
}

pub(crate) fn oracle_text(o: &OracleOutcome) -> String {
    match o {
        OracleOutcome::IrreducibleOverQOfU => "oracle: irreducible over Q(u)\n".to_string(),
        OracleOutcome::Factored(f) => {
            let mut s = format!("oracle: {} factors\n", f.count());
            for (g, m) in &f.factors {
                let _ = writeln!(s, "  ({g})^{m}");
            }
            s
        }
    }
}

pub(crate) fn certificate_text(cert: &Certificate, o: &OracleOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "certificate: {} ({})", cert.conclusion.as_str(), cert.reason.as_str());
    let _ = writeln!(s, "  F = {}", cert.f);
    let _ = writeln!(s, "  monic = {}, lead = {}, alpha = {}, beta = {}", cert.monic, cert.lead, cert.alpha, cert.beta);
    s.push_str(&oracle_text(o));
    s
}

pub(crate) fn compute_text(
    c: &Computed,
    report: &CheckReport,
    cert: Option<(&Certificate, &OracleOutcome)>,
) -> String {
    let mut s = String::new();
    let ctx = c.p.context();
    let _ = writeln!(s, "input: {}", describe_source(c));
    let _ = writeln!(s, "genus {}, q = {}, h = {}", ctx.g, ctx.q, ctx.h);
    if let Some(counts) = &c.counts {
        let list: Vec<String> = counts.as_slice().iter().map(u64::to_string).collect();
        let _ = writeln!(s, "point counts N_1.. = [{}]", list.join(", "));
    }
    if let Some(l) = &ctx.l {
        let _ = writeln!(s, "L(t) = {}", l.poly());
    }
    let _ = writeln!(s, "P(t,u) = {}", c.p.poly());
    let passed = report.checks().iter().filter(|x| x.pass).count();
    let _ = writeln!(s, "checks: {passed}/{} passed", report.len());
    for check in report.checks() {
        let tag = if check.pass { "PASS" } else { "FAIL" };
        match &check.witness {
            Some(w) => {
                let _ = writeln!(s, "  {tag} {} witness {}", check.id, w);
            }
            None => {
                let _ = writeln!(s, "  {tag} {}", check.id);
            }
        }
    }
    if let Some((cert, oracle)) = cert {
        s.push_str(&certificate_text(cert, oracle));
    }
    s
}

pub(crate) fn compute_json(
    c: &Computed,
    report: &CheckReport,
    cert: Option<(&Certificate, &OracleOutcome)>,
    code: i32,
) -> Value {
    let ctx = c.p.context();
    let mut v = json!({
        "genus": ctx.g,
        "q": ctx.q,
        "h": ctx.h,
        "btable": c.btable.to_json(),
        "P": poly_json(c.p.poly()),
        "checks": report.to_json(),
        "all_pass": report.all_pass(),
        "status": code,
    });
    if let Some(counts) = &c.counts {
        v["point_counts"] = json!(counts.as_slice());
    }
    if let Some(l) = &ctx.l {
        v["L"] = l.poly().to_json();
    }
    if let Some(curve) = &c.curve {
        v["curve"] = serde_json::to_value(crate::curves::CurveJson::from_model(curve)).expect("plain data");
    }
    if let Some((cert, oracle)) = cert {
        v["certificate"] = cert.to_json();
        v["oracle"] = oracle.to_json();
    }
    v
}
