//! Exact arithmetic in the cyclotomic field containing `xi = e^{2 pi i / 2N}`.
//!
//! Numbers are stored over the primitive `4N`-th root `zeta = e^{2 pi i / 4N}`,
//! with `xi = zeta^2`, so that the half-integer powers of `q` produced by the
//! ribbon twist specialize exactly. Representatives are reduced modulo the
//! `4N`-th cyclotomic polynomial and carry rational coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// Modulus data for a fixed level.
#[derive(Debug)]
pub struct CyclotomicField {
    level: u32,
    order: u32,
    /// Monic `Phi_order`, lowest coefficient first.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Order of the generator `zeta` (`4 * level`).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Returns the shared field for `level`, building it on first use.
    pub fn get(level: u32) -> Result<Arc<CyclotomicField>> {
        if level < 2 {
            return Err(Error::LevelTooSmall { level, min: 2 });
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        let field = guard.entry(level).or_insert_with(|| {
            let order = 4 * level;
            Arc::new(CyclotomicField {
                level,
                order,
                modulus: cyclotomic_polynomial(order),
            })
        });
        Ok(Arc::clone(field))
    }
}

/// `Phi_m(x)` with integer coefficients, lowest first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// An element of `Q(zeta_{4N})`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.level == other.field.level && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl CyclotomicNumber {
    pub fn zero(level: u32) -> Result<Self> {
        let field = CyclotomicField::get(level)?;
        Ok(Self::zero_in(&field))
    }

    pub fn one(level: u32) -> Result<Self> {
        Self::zeta_pow(level, 0)
    }

    fn zero_in(field: &Arc<CyclotomicField>) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); field.degree()],
            field: Arc::clone(field),
        }
    }

    pub fn from_rational(level: u32, r: BigRational) -> Result<Self> {
        let mut z = Self::zero(level)?;
        z.coeffs[0] = r;
        Ok(z)
    }

    pub fn from_integer(level: u32, n: i64) -> Result<Self> {
        Self::from_rational(level, BigRational::from_integer(n.into()))
    }

    /// `zeta^k` where `zeta = e^{2 pi i / 4N}`.
    pub fn zeta_pow(level: u32, k: i64) -> Result<Self> {
        let field = CyclotomicField::get(level)?;
        let m = field.order as i64;
        let mut raw = vec![BigRational::zero(); field.order as usize];
        raw[k.rem_euclid(m) as usize] = BigRational::one();
        Ok(Self::reduce(&field, raw))
    }

    /// `xi^e` where `xi = e^{2 pi i / 2N}`.
    pub fn xi_pow(level: u32, e: i64) -> Result<Self> {
        Self::zeta_pow(level, 2 * e)
    }

    pub fn level(&self) -> u32 {
        self.field.level
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coefficients of the reduced representative in powers of `zeta`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn reduce(field: &Arc<CyclotomicField>, mut raw: Vec<BigRational>) -> Self {
        let deg = field.degree();
        let modulus = &field.modulus;
        if raw.len() > deg {
            for i in (deg..raw.len()).rev() {
                let c = std::mem::take(&mut raw[i]);
                if c.is_zero() {
                    continue;
                }
                let base = i - deg;
                for (j, mj) in modulus.iter().enumerate().take(deg) {
                    if !mj.is_zero() {
                        raw[base + j] -= &c * BigRational::from_integer(mj.clone());
                    }
                }
            }
            raw.truncate(deg);
        }
        raw.resize(deg, BigRational::zero());
        Self {
            field: Arc::clone(field),
            coeffs: raw,
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.level, other.field.level,
            "cyclotomic numbers from different levels"
        );
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::zero_in(&self.field);
        acc.coeffs[0] = BigRational::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = ext_gcd(trim(self.coeffs.clone()), modulus);
        // the modulus is irreducible, so g is a nonzero constant
        if g.len() != 1 {
            return Err(Error::Internal("cyclotomic gcd is not a unit".into()));
        }
        let inv_g = g[0].recip();
        let raw = s.into_iter().map(|c| c * &inv_g).collect();
        Ok(Self::reduce(&self.field, raw))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.field.order as usize;
        let mut raw = vec![BigRational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(m - k) % m] += c;
        }
        Self::reduce(&self.field, raw)
    }

    /// Image under the embedding `zeta -> e^{2 pi i / 4N}`.
    pub fn to_complex(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI / self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                Complex64::from_polar(1.0, theta * k as f64) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(b.len() - 1);
    if rem.is_empty() {
        rem.push(BigRational::zero());
    }
    (quot, trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v;
    }
    trim(out)
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns `(g, s)` with `s * a == g (mod m)`.
fn ext_gcd(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![BigRational::one()], vec![BigRational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (trim(r0), s0)
}

impl Add<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        let deg = self.field.degree();
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber::reduce(&self.field, raw)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", abs)?,
                _ if abs.is_one() => write!(f, "z^{}", k)?,
                _ => write!(f, "{}*z^{}", abs, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[N={}]({})", self.field.level, self)
    }
}

/// Image of `p` under `q -> xi` (and `q^{1/2} -> zeta`).
pub fn eval_at_root(p: &QPoly, level: u32) -> Result<CyclotomicNumber> {
    let field = CyclotomicField::get(level)?;
    let m = field.order as i64;
    let mut raw = vec![BigRational::zero(); field.order as usize];
    for (h, c) in p.half_terms() {
        raw[h.rem_euclid(m) as usize] += BigRational::from_integer(c.clone());
    }
    Ok(CyclotomicNumber::reduce(&field, raw))
}
