//! Small finite fields `F_{p^d}` with log/exp multiplication tables.
//!
//! Elements are encoded as integers `Σ c_i p^i`, where `c_0 + c_1 x + …` is the
//! residue modulo the defining polynomial. Addition works digit-wise;
//! multiplication goes through discrete logarithms with respect to a
//! primitive element found at construction time.

use serde::{Deserialize, Serialize};

use super::CurveError;

/// Largest prime accepted for a user-facing base field.
pub const MAX_BASE_PRIME: u32 = 13;
/// Largest extension degree accepted for a user-facing base field.
pub const MAX_BASE_DEGREE: u32 = 4;
/// Largest field order we build tables for (base fields and counting extensions).
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

pub type Elem = u32;

/// Defining data of `F_q`, `q = p^m`. `modulus` is monic, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

/// Conway polynomials for the pairs exercised in tests; each is re-verified
/// irreducible when used.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over F_p as coefficient vectors, low degree first.

fn fp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_inv(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat.
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = fp_trim(b.to_vec());
    let mut r = fp_trim(a.to_vec());
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv % p;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * bj % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

/// Exhaustive irreducibility test: no monic divisor of degree `1..=deg/2`.
pub fn is_irreducible_fp(f: &[u32], p: u32) -> bool {
    let f = fp_trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if fp_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Built-in modulus for `(p, d)`, falling back to the lexicographically first
/// monic irreducible polynomial of degree `d`.
pub fn default_modulus(p: u32, d: u32) -> Vec<u32> {
    if let Some((_, _, m)) = BUILTIN_MODULI.iter().find(|(bp, bd, _)| *bp == p && *bd == d) {
        return m.to_vec();
    }
    let count = (p as u64).pow(d);
    (0..count)
        .map(|idx| {
            let mut f = Vec::with_capacity(d as usize + 1);
            let mut x = idx;
            for _ in 0..d {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            f
        })
        .find(|f| is_irreducible_fp(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// The finite field `F_{p^degree}` with precomputed tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    degree: u32,
    modulus: Vec<u32>,
    order: u32,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl Field {
    /// Build a field of any degree up to [`MAX_FIELD_ORDER`] elements.
    pub fn new(p: u32, degree: u32, modulus: Option<Vec<u32>>) -> Result<Self, CurveError> {
        if !is_prime(p) {
            return Err(CurveError::NotPrime(p));
        }
        if degree == 0 {
            return Err(CurveError::UnsupportedField(format!("degree must be >= 1 (p={p})")));
        }
        let order = (p as u64)
            .checked_pow(degree)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                CurveError::UnsupportedField(format!("{p}^{degree} exceeds {MAX_FIELD_ORDER} elements"))
            })?;
        let modulus = match (degree, modulus) {
            (1, None) => vec![0, 1],
            (_, None) => default_modulus(p, degree),
            (_, Some(m)) => m,
        };
        if modulus.len() != degree as usize + 1
            || modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(CurveError::BadModulus(format!(
                "modulus {modulus:?} must be monic of degree {degree} with entries < {p}"
            )));
        }
        if !is_irreducible_fp(&modulus, p) {
            return Err(CurveError::ReducibleModulus(modulus));
        }
        let mut field = Field {
            p,
            degree,
            modulus,
            order: order as u32,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.order as u64;
        let factors = prime_factors(q - 1);
        let generator = (1..self.order)
            .find(|&g| factors.iter().all(|&r| self.slow_pow(g, (q - 1) / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x: Elem = 1;
        for i in 0..(q - 1) as u32 {
            exp.push(x);
            log[x as usize] = i;
            x = self.slow_mul(x, generator);
        }
        debug_assert_eq!(x, 1);
        self.exp = exp;
        self.log = log;
    }

    fn digits(&self, a: Elem) -> Vec<u32> {
        let mut a = a;
        (0..self.degree)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, ds: &[u32]) -> Elem {
        ds.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.degree as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = fp_rem(&prod, &self.modulus, self.p);
        r.resize(self.degree as usize, 0);
        self.undigits(&r)
    }

    fn slow_pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut r = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.slow_mul(r, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            m: self.degree,
            modulus: (self.degree > 1).then(|| self.modulus.clone()),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    /// Element with the given residue coefficients (low degree first).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Elem, CurveError> {
        if coeffs.len() > self.degree as usize {
            return Err(CurveError::BadElement(format!(
                "{coeffs:?} has more than {} residue coefficients",
                self.degree
            )));
        }
        let ds: Vec<u32> = coeffs.iter().map(|&c| self.from_int(c)).collect();
        Ok(self.undigits(&ds))
    }

    pub fn coeffs_of(&self, a: Elem) -> Vec<u32> {
        self.digits(a)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut r = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let ds: Vec<u32> = self.digits(a).iter().map(|&d| (self.p - d) % self.p).collect();
        self.undigits(&ds)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.order - 1);
        self.exp[s as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let n = self.order - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.order - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    pub fn scalar(&self, n: i64, a: Elem) -> Elem {
        self.mul(self.from_int(n), a)
    }

    /// Horner evaluation of a polynomial with coefficients in this field.
    pub fn eval_poly(&self, coeffs: &[Elem], x: Elem) -> Elem {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// `#{y : y² = v}` for every `v`.
    pub fn square_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.order as usize];
        for y in self.elements() {
            counts[self.mul(y, y) as usize] += 1;
        }
        counts
    }

    /// `#{z : z² + z = w}` for every `w`.
    pub fn artin_schreier_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.order as usize];
        for z in self.elements() {
            counts[self.add(self.mul(z, z), z) as usize] += 1;
        }
        counts
    }

    /// Embedding of `base` into `self`, sending the generator of `base` to the
    /// smallest root of its modulus. Requires `base.degree | self.degree`
    /// and equal characteristic.
    pub fn embedding_of(&self, base: &Field) -> Result<Embedding, CurveError> {
        if base.p != self.p || !self.degree.is_multiple_of(base.degree) {
            return Err(CurveError::UnsupportedField(format!(
                "F_{}^{} does not embed in F_{}^{}",
                base.p, base.degree, self.p, self.degree
            )));
        }
        let modulus: Vec<Elem> = base.modulus.iter().map(|&c| c as Elem).collect();
        let root = self
            .elements()
            .find(|&x| self.eval_poly(&modulus, x) == 0)
            .ok_or_else(|| CurveError::UnsupportedField("modulus has no root in extension".into()))?;
        let powers: Vec<Elem> = (0..base.degree as u64).map(|i| self.pow(root, i)).collect();
        let image = base
            .elements()
            .map(|a| {
                base.digits(a)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&d, &r)| self.add(acc, self.scalar(d as i64, r)))
            })
            .collect();
        Ok(Embedding { image })
    }

    // Polynomials over this field, low degree first, trailing zeros trimmed.

    fn poly_trim(mut a: Vec<Elem>) -> Vec<Elem> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_derivative(&self, f: &[Elem]) -> Vec<Elem> {
        Self::poly_trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.scalar(i as i64, c))
                .collect(),
        )
    }

    pub fn poly_rem(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let b = Self::poly_trim(b.to_vec());
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = Self::poly_trim(a.to_vec());
        let db = b.len() - 1;
        let inv = self.inv(b[db]).expect("nonzero leading coefficient");
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = self.mul(r[r.len() - 1], inv);
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, bj));
            }
            r = Self::poly_trim(r);
        }
        r
    }

    /// Monic gcd.
    pub fn poly_gcd(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut a = Self::poly_trim(a.to_vec());
        let mut b = Self::poly_trim(b.to_vec());
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        if let Some(&lc) = a.last() {
            let inv = self.inv(lc).expect("nonzero");
            a = a.iter().map(|&c| self.mul(c, inv)).collect();
        }
        a
    }
}

/// Table-driven ring homomorphism between two fields.
#[derive(Clone, Debug)]
pub struct Embedding {
    image: Vec<Elem>,
}

impl Embedding {
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a as usize]
    }
}

/// User-facing constructor: `p ≤ 13` prime, `1 ≤ m ≤ 4`, modulus verified
/// irreducible by exhaustive factor search.
pub fn make_field(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Field, CurveError> {
    if !is_prime(p) {
        return Err(CurveError::NotPrime(p));
    }
    if p > MAX_BASE_PRIME || m == 0 || m > MAX_BASE_DEGREE {
        return Err(CurveError::UnsupportedField(format!(
            "need p <= {MAX_BASE_PRIME} and 1 <= m <= {MAX_BASE_DEGREE}, got p={p}, m={m}"
        )));
    }
    Field::new(p, m, modulus)
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field, CurveError> {
        // A degree-1 modulus is redundant; drop it rather than reject it.
        let modulus = self.modulus.clone().filter(|_| self.m > 1);
        make_field(self.p, self.m, modulus)
    }
}
