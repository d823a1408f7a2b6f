//! Multivariate Laurent polynomials over the integers in the deck-transformation
//! variables `x_1..x_n`, `y_1..y_l` and `d`, together with the colouring maps
//! into them and out of them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{QPoly, TermRecord};

/// Number of `x` and `y` variables; a single `d` is always present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarContext {
    pub nx: usize,
    pub ny: usize,
}

impl VarContext {
    pub fn new(nx: usize, ny: usize) -> Self {
        Self { nx, ny }
    }

    pub fn arity(&self) -> usize {
        self.nx + self.ny + 1
    }

    fn d_slot(&self) -> usize {
        self.nx + self.ny
    }
}

/// Exponent tuple `[x_1..x_nx, y_1..y_ny, d]`, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Z[x^{±1}, y^{±1}, d^{±1}]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ctx: VarContext,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: VarContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: VarContext, c: impl Into<BigInt>) -> Self {
        Self::term(ctx, c, vec![0; ctx.arity()]).expect("arity matches")
    }

    /// `c * prod var^exp` from a full exponent tuple.
    pub fn term(ctx: VarContext, c: impl Into<BigInt>, exps: Vec<i64>) -> Result<Self> {
        if exps.len() != ctx.arity() {
            return Err(Error::Parse(format!(
                "exponent tuple of length {} for {} variables",
                exps.len(),
                ctx.arity()
            )));
        }
        let mut p = Self::zero(ctx);
        p.add_term(Monomial(exps), c.into());
        Ok(p)
    }

    /// `x_i^e`, 1-based.
    pub fn x(ctx: VarContext, i: usize, e: i64) -> Result<Self> {
        check_index("x", i, ctx.nx)?;
        let mut exps = vec![0; ctx.arity()];
        exps[i - 1] = e;
        Self::term(ctx, 1, exps)
    }

    /// `y_j^e`, 1-based.
    pub fn y(ctx: VarContext, j: usize, e: i64) -> Result<Self> {
        check_index("y", j, ctx.ny)?;
        let mut exps = vec![0; ctx.arity()];
        exps[ctx.nx + j - 1] = e;
        Self::term(ctx, 1, exps)
    }

    /// `d^e`.
    pub fn d(ctx: VarContext, e: i64) -> Self {
        let mut exps = vec![0; ctx.arity()];
        exps[ctx.d_slot()] = e;
        Self::term(ctx, 1, exps).expect("arity matches")
    }

    pub fn context(&self) -> VarContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.ctx, other.ctx,
            "Laurent polynomials live in different rings"
        );
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The same polynomial in a ring with at least as many `x` and `y` variables.
    pub fn embed(&self, ctx: VarContext) -> Result<Self> {
        if ctx.nx < self.ctx.nx || ctx.ny < self.ctx.ny {
            return Err(Error::IndexOutOfRange {
                kind: "variable",
                index: self.ctx.nx.max(self.ctx.ny) as i64,
                max: ctx.nx.min(ctx.ny),
            });
        }
        let mut out = Self::zero(ctx);
        for (m, c) in &self.terms {
            let mut e = vec![0; ctx.arity()];
            e[..self.ctx.nx].copy_from_slice(&m.0[..self.ctx.nx]);
            e[ctx.nx..ctx.nx + self.ctx.ny].copy_from_slice(&m.0[self.ctx.nx..self.ctx.d_slot()]);
            e[ctx.d_slot()] = m.0[self.ctx.d_slot()];
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Change of coefficients `f_C`: `x_i -> x_{C(i)}`, `y_j -> y_{C(p_j)}`, `d -> d`.
    pub fn apply_fc(&self, spec: &SpecializationSpec) -> Result<Self> {
        let n = spec.colouring.len();
        let l = spec.colours.len();
        if self.ctx.nx > n || self.ctx.ny > spec.representatives.len() {
            return Err(Error::IndexOutOfRange {
                kind: "variable",
                index: self.ctx.nx.max(self.ctx.ny) as i64,
                max: n,
            });
        }
        let target = VarContext::new(l, l);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for i in 0..self.ctx.nx {
                e[spec.colouring[i] - 1] += m.0[i];
            }
            for j in 0..self.ctx.ny {
                let comp = spec.colouring[spec.representatives[j] - 1];
                e[l + comp - 1] += m.0[self.ctx.nx + j];
            }
            e[target.d_slot()] = m.0[self.ctx.d_slot()];
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Specialization `psi`: `x_i -> q^{N_i-1}`, `y_i -> q^{N_i}`, `d -> q^{-2}`.
    pub fn specialize_psi(&self, spec: &SpecializationSpec) -> Result<QPoly> {
        let l = spec.colours.len();
        if self.ctx.nx > l || self.ctx.ny > l {
            return Err(Error::IndexOutOfRange {
                kind: "colour",
                index: self.ctx.nx.max(self.ctx.ny) as i64,
                max: l,
            });
        }
        let mut out = QPoly::zero();
        for (m, c) in &self.terms {
            let mut e = 0i64;
            for i in 0..self.ctx.nx {
                e += m.0[i] * (spec.colours[i] as i64 - 1);
            }
            for j in 0..self.ctx.ny {
                e += m.0[self.ctx.nx + j] * spec.colours[j] as i64;
            }
            e -= 2 * m.0[self.ctx.d_slot()];
            out += &QPoly::monomial(c.clone(), e);
        }
        Ok(out)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                exponents: m.0.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(ctx: VarContext, records: &[TermRecord]) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for r in records {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", r.coeff)))?;
            p += &Self::term(ctx, c, r.exponents.clone())?;
        }
        Ok(p)
    }

    fn var_name(&self, slot: usize) -> String {
        if slot < self.ctx.nx {
            format!("x{}", slot + 1)
        } else if slot < self.ctx.nx + self.ctx.ny {
            format!("y{}", slot - self.ctx.nx + 1)
        } else {
            "d".to_string()
        }
    }
}

fn check_index(kind: &'static str, i: usize, max: usize) -> Result<()> {
    if i == 0 || i > max {
        Err(Error::IndexOutOfRange {
            kind,
            index: i as i64,
            max,
        })
    } else {
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.assert_same_ring(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    // Monomials multiply by adding exponent vectors.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.assert_same_ring(rhs);
        let mut out = LaurentPoly::zero(self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.0.iter().zip(&b.0).map(|(u, v)| u + v).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e != 0)
                    .map(|(slot, e)| {
                        if *e == 1 {
                            self.var_name(slot)
                        } else {
                            format!("{}^{}", self.var_name(slot), e)
                        }
                    })
                    .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LaurentPoly[{}x,{}y]({})",
            self.ctx.nx, self.ctx.ny, self
        )
    }
}

/// Colour data feeding `f_C` and `psi`.
///
/// `colouring[i-1]` is the component (1-based) of strand `i`,
/// `representatives[j-1]` is the strand carrying `y_j`, and `colours[c-1]`
/// is the dimension `N_c` of the module on component `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationSpec {
    pub colours: Vec<u32>,
    pub colouring: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl SpecializationSpec {
    pub fn new(
        colours: Vec<u32>,
        colouring: Vec<usize>,
        representatives: Vec<usize>,
    ) -> Result<Self> {
        let l = colours.len();
        if let Some(&c) = colours.iter().find(|&&c| c == 0) {
            return Err(Error::ColourMismatch(format!(
                "colour {c} must be positive"
            )));
        }
        for &c in &colouring {
            check_index("component", c, l)?;
        }
        for &p in &representatives {
            check_index("strand", p, colouring.len())?;
        }
        Ok(Self {
            colours,
            colouring,
            representatives,
        })
    }

    /// Colour of each strand, `C_k = N_{C(k)}`.
    pub fn strand_colours(&self) -> Vec<u32> {
        self.colouring
            .iter()
            .map(|&c| self.colours[c - 1])
            .collect()
    }
}

/// `specialize_psi(apply_fc(p))` in one call.
pub fn specialize_composed(p: &LaurentPoly, spec: &SpecializationSpec) -> Result<QPoly> {
    p.apply_fc(spec)?.specialize_psi(spec)
}

/// True if the polynomial is a single term with coefficient `±1`.
pub fn is_signed_monomial(p: &LaurentPoly) -> bool {
    p.len() == 1 && p.terms().all(|(_, c)| c.abs().is_one())
}
