use std::path::{Path, PathBuf};

use serde_json::json;

use super::CliError;
use crate::curves::{l_polynomial, CurveJson, CurveModel, PointCounts};
use crate::zeta2::{
    alpha_matrix, btable_structural, clifford_validate, cumulative_identity_check, p_from_btable,
    verify_theorem1, BTable, BTableJson, CheckReport, CurveParams, PPoly,
};

/// Where a job's curve data comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Curve(PathBuf),
    /// `g=1,q=2,N=3` or `g=2,q=2,a=0,b=0` or `g=0,q=3`.
    Params(String),
    BTable(PathBuf),
}

/// Everything the pipeline produced for one input.
#[derive(Clone, Debug)]
pub struct Computed {
    pub curve: Option<CurveModel>,
    pub counts: Option<PointCounts>,
    pub params: Option<CurveParams>,
    pub btable: BTable,
    pub p: PPoly,
}

/// Count points, recover `L` and run the table and assembly stages.
pub fn from_curve(curve: CurveModel) -> Result<Computed, CliError> {
    let counts = curve.point_counts()?;
    let l = l_polynomial(&counts)?;
    let params = CurveParams::from_l(&l)?;
    let btable = btable_structural(params, false)?;
    let p = p_from_btable(&btable)?.with_l(l);
    Ok(Computed {
        curve: Some(curve),
        counts: Some(counts),
        params: Some(params),
        btable,
        p,
    })
}

pub fn from_params(params: CurveParams, synthetic: bool) -> Result<Computed, CliError> {
    let btable = btable_structural(params, synthetic)?;
    let mut p = p_from_btable(&btable)?;
    if let Ok(l) = params.l_poly() {
        p = p.with_l(l);
    }
    Ok(Computed {
        curve: None,
        counts: None,
        params: Some(params),
        btable,
        p,
    })
}

pub fn from_btable(btable: BTable) -> Result<Computed, CliError> {
    let p = p_from_btable(&btable)?;
    Ok(Computed {
        curve: None,
        counts: None,
        params: None,
        btable,
        p,
    })
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

pub fn load(source: &Source, synthetic: bool) -> Result<Computed, CliError> {
    match source {
        Source::Curve(path) => from_curve(CurveJson::parse(&read(path)?)?.to_model()?),
        Source::Params(text) => from_params(parse_params(text)?, synthetic),
        Source::BTable(path) => {
            let mut raw: BTableJson =
                serde_json::from_str(&read(path)?).map_err(|e| CliError::Json(e.to_string()))?;
            raw.synthetic |= synthetic;
            from_btable(raw.into_table()?)
        }
    }
}

/// Parses `K=V,K=V,…` with keys `g`, `q` and, depending on `g`, `N` or `a`, `b`.
pub fn parse_params(text: &str) -> Result<CurveParams, CliError> {
    let mut g = None;
    let mut q = None;
    let mut n = None;
    let mut a = None;
    let mut b = None;
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Params(format!("expected K=V, got {part:?}")))?;
        let v: i64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Params(format!("{key} = {value:?} is not an integer")))?;
        let slot = match key.trim() {
            "g" => &mut g,
            "q" => &mut q,
            "N" | "n" => &mut n,
            "a" => &mut a,
            "b" => &mut b,
            other => return Err(CliError::Params(format!("unknown key {other:?}"))),
        };
        if slot.replace(v).is_some() {
            return Err(CliError::Params(format!("duplicate key {key:?}")));
        }
    }
    let need = |v: Option<i64>, k: &str| v.ok_or_else(|| CliError::Params(format!("missing {k}")));
    let q = need(q, "q")?;
    let used = |extra: &[(Option<i64>, &str)]| -> Result<(), CliError> {
        match extra.iter().find(|(v, _)| v.is_some()) {
            Some((_, k)) => Err(CliError::Params(format!("{k} does not apply to this genus"))),
            None => Ok(()),
        }
    };
    match need(g, "g")? {
        0 => {
            used(&[(n, "N"), (a, "a"), (b, "b")])?;
            Ok(CurveParams::Genus0 { q })
        }
        1 => {
            used(&[(a, "a"), (b, "b")])?;
            Ok(CurveParams::Genus1 { q, n: need(n, "N")? })
        }
        2 => {
            used(&[(n, "N")])?;
            Ok(CurveParams::Genus2 {
                q,
                a: need(a, "a")?,
                b: need(b, "b")?,
            })
        }
        g => Err(CliError::Unsupported(format!("genus {g} (parameters exist for g <= 2)"))),
    }
}

/// Structural checks on `P`, the coefficient identity for `ν ≤ max(2g+2, 6)`,
/// `α ≤ 6`, and the Clifford bound on the table.
pub fn run_checks(c: &Computed) -> CheckReport {
    let mut report = verify_theorem1(&c.p);
    let g = c.p.genus();
    match alpha_matrix(&c.p) {
        Ok(a) => {
            report.record("ALPHA", true, || json!(null));
            report.extend(cumulative_identity_check(&a, &c.btable, (2 * g + 2).max(6), 6));
        }
        Err(e) => report.record("ALPHA", false, || json!({"error": e.to_string()})),
    }
    report.extend(clifford_validate(&c.btable));
    report
}
