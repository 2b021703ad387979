use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::{Elem, Field, FieldSpec};
use super::{CurveError, PointCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Elliptic,
    HyperellipticG2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equation {
    /// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`
    Weierstrass {
        a1: Elem,
        a2: Elem,
        a3: Elem,
        a4: Elem,
        a6: Elem,
    },
    /// `y² = f(x)`, `f` monic of degree 5, low degree first.
    Hyperelliptic { f: Vec<Elem> },
}

/// A smooth curve of genus 1 or 2 given by an explicit affine model with a
/// single point at infinity.
#[derive(Clone, Debug)]
pub struct CurveModel {
    field: Arc<Field>,
    equation: Equation,
}

impl CurveModel {
    /// Long Weierstrass model; rejected when the discriminant vanishes.
    pub fn elliptic(field: Arc<Field>, [a1, a2, a3, a4, a6]: [Elem; 5]) -> Result<Self, CurveError> {
        let curve = Self {
            field,
            equation: Equation::Weierstrass { a1, a2, a3, a4, a6 },
        };
        if curve.discriminant() == 0 {
            return Err(CurveError::Singular("Weierstrass discriminant is zero".into()));
        }
        Ok(curve)
    }

    /// `y² = f(x)` with `f` monic quintic; requires odd characteristic and `gcd(f, f') = 1`.
    pub fn hyperelliptic(field: Arc<Field>, f: Vec<Elem>) -> Result<Self, CurveError> {
        if field.characteristic() == 2 {
            return Err(CurveError::CharacteristicTwo);
        }
        if f.len() != 6 || f[5] != field.one() {
            return Err(CurveError::NotMonicQuintic(f.len().saturating_sub(1)));
        }
        let df = field.poly_derivative(&f);
        if field.poly_gcd(&f, &df) != [field.one()] {
            return Err(CurveError::Singular("f(x) is not squarefree".into()));
        }
        Ok(Self {
            field,
            equation: Equation::Hyperelliptic { f },
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn equation(&self) -> &Equation {
        &self.equation
    }

    pub fn kind(&self) -> CurveKind {
        match self.equation {
            Equation::Weierstrass { .. } => CurveKind::Elliptic,
            Equation::Hyperelliptic { .. } => CurveKind::HyperellipticG2,
        }
    }

    pub fn genus(&self) -> usize {
        match self.kind() {
            CurveKind::Elliptic => 1,
            CurveKind::HyperellipticG2 => 2,
        }
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// Standard discriminant of the long Weierstrass form (zero for the hyperelliptic kind).
    pub fn discriminant(&self) -> Elem {
        let Equation::Weierstrass { a1, a2, a3, a4, a6 } = self.equation else {
            return 0;
        };
        let k = &*self.field;
        let (add, mul, sc) = (|a, b| k.add(a, b), |a, b| k.mul(a, b), |n, a| k.scalar(n, a));
        let b2 = add(mul(a1, a1), sc(4, a2));
        let b4 = add(sc(2, a4), mul(a1, a3));
        let b6 = add(mul(a3, a3), sc(4, a6));
        let b8 = [
            mul(mul(a1, a1), a6),
            sc(4, mul(a2, a6)),
            k.neg(mul(mul(a1, a3), a4)),
            mul(a2, mul(a3, a3)),
            k.neg(mul(a4, a4)),
        ]
        .into_iter()
        .fold(0, add);
        [
            k.neg(mul(mul(b2, b2), b8)),
            sc(-8, mul(mul(b4, b4), b4)),
            sc(-27, mul(b6, b6)),
            sc(9, mul(mul(b2, b4), b6)),
        ]
        .into_iter()
        .fold(0, add)
    }

    /// Number of projective points over `F_{q^m}`: affine solutions plus the
    /// single point at infinity.
    pub fn count_points(&self, m: u32) -> Result<u64, CurveError> {
        if m == 0 {
            return Err(CurveError::UnsupportedField("extension degree must be >= 1".into()));
        }
        let base = &*self.field;
        let ext_owned;
        let (ext, embed): (&Field, Box<dyn Fn(Elem) -> Elem>) = if m == 1 {
            (base, Box::new(|a| a))
        } else {
            ext_owned = Field::new(base.characteristic(), base.degree() * m, None)?;
            let e = ext_owned.embedding_of(base)?;
            (&ext_owned, Box::new(move |a| e.apply(a)))
        };
        let affine: u64 = match &self.equation {
            Equation::Weierstrass { a1, a2, a3, a4, a6 } => {
                let [a1, a2, a3, a4, a6] = [*a1, *a2, *a3, *a4, *a6].map(&embed);
                let rhs_poly = [a6, a4, a2, ext.one()];
                if ext.characteristic() == 2 {
                    let as_counts = ext.artin_schreier_counts();
                    ext.elements()
                        .map(|x| {
                            let c = ext.add(ext.mul(a1, x), a3);
                            let r = ext.eval_poly(&rhs_poly, x);
                            match ext.inv(c) {
                                // squaring is a bijection in characteristic 2
                                None => 1,
                                Some(ci) => as_counts[ext.mul(r, ext.mul(ci, ci)) as usize] as u64,
                            }
                        })
                        .sum()
                } else {
                    let sq = ext.square_counts();
                    let quarter = ext.inv(ext.from_int(4)).expect("odd characteristic");
                    ext.elements()
                        .map(|x| {
                            let c = ext.add(ext.mul(a1, x), a3);
                            let r = ext.eval_poly(&rhs_poly, x);
                            let v = ext.add(r, ext.mul(quarter, ext.mul(c, c)));
                            sq[v as usize] as u64
                        })
                        .sum()
                }
            }
            Equation::Hyperelliptic { f } => {
                let f: Vec<Elem> = f.iter().map(|&c| embed(c)).collect();
                let sq = ext.square_counts();
                ext.elements().map(|x| sq[ext.eval_poly(&f, x) as usize] as u64).sum()
            }
        };
        Ok(affine + 1)
    }

    /// `N_1, …, N_g`, checked against the Hasse–Weil window.
    pub fn point_counts(&self) -> Result<PointCounts, CurveError> {
        let g = self.genus();
        let counts = (1..=g as u32)
            .map(|m| self.count_points(m))
            .collect::<Result<Vec<_>, _>>()?;
        PointCounts::new(self.q(), g, counts)
    }
}

/// A field element as JSON: a bare residue (prime fields) or a residue
/// coefficient vector, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Scalar(i64),
    Coeffs(Vec<i64>),
}

impl ElemJson {
    fn to_elem(&self, k: &Field) -> Result<Elem, CurveError> {
        match self {
            ElemJson::Scalar(n) => Ok(k.from_int(*n)),
            ElemJson::Coeffs(c) => k.from_coeffs(c),
        }
    }

    fn from_elem(k: &Field, a: Elem) -> Self {
        if k.degree() == 1 {
            ElemJson::Scalar(a as i64)
        } else {
            ElemJson::Coeffs(k.coeffs_of(a).into_iter().map(i64::from).collect())
        }
    }
}

/// `{"kind": …, "field": {"p", "m", "modulus"}, "coeffs": {…}}`. Elliptic coefficients are
/// named `a1 a2 a3 a4 a6` (missing ones are 0); hyperelliptic ones are `"f": [f0, …, f5]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub kind: CurveKind,
    pub field: FieldSpec,
    pub coeffs: BTreeMap<String, serde_json::Value>,
}

impl CurveJson {
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        serde_json::from_str(text).map_err(|e| CurveError::Json(e.to_string()))
    }

    pub fn to_model(&self) -> Result<CurveModel, CurveError> {
        let field = Arc::new(self.field.build()?);
        let elem = |v: &serde_json::Value| -> Result<Elem, CurveError> {
            serde_json::from_value::<ElemJson>(v.clone())
                .map_err(|e| CurveError::Json(e.to_string()))?
                .to_elem(&field)
        };
        match self.kind {
            CurveKind::Elliptic => {
                if let Some(bad) = self
                    .coeffs
                    .keys()
                    .find(|k| !["a1", "a2", "a3", "a4", "a6"].contains(&k.as_str()))
                {
                    return Err(CurveError::Json(format!("unknown Weierstrass coefficient {bad:?}")));
                }
                let get = |name: &str| match self.coeffs.get(name) {
                    Some(v) => elem(v),
                    None => Ok(0),
                };
                let a = [get("a1")?, get("a2")?, get("a3")?, get("a4")?, get("a6")?];
                CurveModel::elliptic(field.clone(), a)
            }
            CurveKind::HyperellipticG2 => {
                let f = self
                    .coeffs
                    .get("f")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| CurveError::Json("hyperelliptic curve needs \"f\": [f0..f5]".into()))?;
                let f = f.iter().map(elem).collect::<Result<Vec<_>, _>>()?;
                CurveModel::hyperelliptic(field.clone(), f)
            }
        }
    }

    pub fn from_model(c: &CurveModel) -> Self {
        let k = c.field();
        let to_value =
            |a: Elem| serde_json::to_value(ElemJson::from_elem(k, a)).expect("plain data");
        let mut coeffs = BTreeMap::new();
        match c.equation() {
            Equation::Weierstrass { a1, a2, a3, a4, a6 } => {
                for (name, v) in [("a1", a1), ("a2", a2), ("a3", a3), ("a4", a4), ("a6", a6)] {
                    coeffs.insert(name.to_string(), to_value(*v));
                }
            }
            Equation::Hyperelliptic { f } => {
                coeffs.insert(
                    "f".to_string(),
                    serde_json::Value::Array(f.iter().map(|&a| to_value(a)).collect()),
                );
            }
        }
        Self {
            kind: c.kind(),
            field: k.spec(),
            coeffs,
        }
    }
}
