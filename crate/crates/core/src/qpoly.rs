//! Single-variable Laurent polynomials in `q`.
//!
//! Exponents are stored in units of `q^{1/2}` so that the quadratic ribbon
//! twist `q^{(N^2-1)/2}` stays exact. Everything built from the homological
//! variables (`x`, `y`, `d`) lands on integer powers of `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Laurent polynomial in `q^{1/2}` with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    // half-exponent -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::half_monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::half_monomial(c, 2 * e)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `c * q^{h/2}`.
    pub fn half_monomial(c: impl Into<BigInt>, h: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(h, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms as `(half_exponent, coefficient)` in increasing exponent order.
    pub fn half_terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(h, c)| (*h, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|h| h % 2 == 0)
    }

    /// Coefficient of `q^{h/2}`.
    pub fn half_coeff(&self, h: i64) -> BigInt {
        self.terms.get(&h).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.half_coeff(2 * e)
    }

    /// If the polynomial is `c * q^{h/2}`, returns `(c, h)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(h, c)| (c, *h))
        } else {
            None
        }
    }

    fn add_term(&mut self, h: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(h) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^{h/2}`.
    pub fn shift_half(&self, h: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + h, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `q -> q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Evaluates at a complex number `s` standing for `q^{1/2}`.
    pub fn eval_half(&self, s: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(h, c)| s.powi(*h as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    pub fn to_record(&self) -> QPolyRecord {
        QPolyRecord {
            var: "q^(1/2)".to_string(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(h, c)| TermRecord {
                    exponents: vec![*h],
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &QPolyRecord) -> Result<Self> {
        if rec.var != "q^(1/2)" {
            return Err(Error::Parse(format!("unexpected variable {:?}", rec.var)));
        }
        let mut p = Self::zero();
        for t in &rec.terms {
            let [h] = t.exponents[..] else {
                return Err(Error::Parse("univariate term needs one exponent".into()));
            };
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(h, c);
        }
        Ok(p)
    }
}

/// One serialized term: exponent tuple plus decimal coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<i64>,
    pub coeff: String,
}

/// Serialized [`QPoly`]; exponents count powers of `q^(1/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolyRecord {
    pub var: String,
    pub terms: Vec<TermRecord>,
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (h, c) in &rhs.terms {
            self.add_term(*h, c.clone());
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(h, c)| (*h, -c)).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (h, c) in &rhs.terms {
            out.add_term(*h, -c);
        }
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

fn fmt_exponent(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{}/2", h)
    }
}

/// Renders in decreasing degree, e.g. `q^2 + 1 + q^-2` or `-q^3/2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (h, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *h == 0 {
                write!(f, "{}", abs)?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{}*", abs)?;
            }
            if *h == 2 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{}", fmt_exponent(*h))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self)
    }
}

/// Which of the two quantum-number conventions to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantumMode {
    /// `{N} = q^N - q^{-N}`
    Brace,
    /// `[N] = (q^N - q^{-N}) / (q - q^{-1})`
    Bracket,
}

/// `[N]_q` or `{N}_q` as a Laurent polynomial.
pub fn quantum_integer(n: i64, mode: QuantumMode) -> Result<QPoly> {
    if n < 0 {
        return Err(Error::NegativeQuantumInteger(n));
    }
    Ok(match mode {
        QuantumMode::Brace => QPoly::q_pow(n) - QPoly::q_pow(-n),
        QuantumMode::Bracket => (0..n).map(|i| QPoly::q_pow(n - 1 - 2 * i)).sum(),
    })
}

/// Gaussian binomial `[n choose k]` (symmetric form), built by the q-Pascal rule.
pub fn quantum_binomial(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    // [n, k] = q^{n-k} [n-1, k-1] + q^{-k} [n-1, k]
    let mut row = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut v = QPoly::zero();
            if j >= 1 {
                v += &row[j as usize - 1].shift_half(2 * (m - j) as i64);
            }
            if j < m {
                v += &row[j as usize].shift_half(-2 * j as i64);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}
