//! Graded intersection pairings from signed intersection points.
//!
//! Each intersection point carries a sign `α_x` and a loop `l_x` in the
//! configuration space, recorded through its class in `H_1` as a word in the
//! generators `σ_i, γ_j, γ̄_j, η_j, δ`. The local system sends a loop to the
//! monomial obtained from the augmentation
//!
//! ```text
//! σ_i -> x_i^2   (x_i^{-2} for the last k punctures)
//! γ_j -> y_j^2,  γ̄_j -> y_j^{-2},  η_j -> y_j,  δ -> d' = -d
//! ```
//!
//! and the pairing is `Σ_x α_x Φ(l_x)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, VarContext};

/// Generator of the first homology of the configuration space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Sigma,
    Gamma,
    GammaBar,
    Eta,
    Delta,
}

impl GeneratorKind {
    fn name(self) -> &'static str {
        match self {
            GeneratorKind::Sigma => "sigma",
            GeneratorKind::Gamma => "gamma",
            GeneratorKind::GammaBar => "gamma-bar",
            GeneratorKind::Eta => "eta",
            GeneratorKind::Delta => "delta",
        }
    }
}

/// One letter `(kind, index, exponent)`; `delta` carries no index.
///
/// Serialized as the array `[kind, index, exp]` with `null` as the delta index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter(pub GeneratorKind, pub Option<usize>, pub i64);

impl Letter {
    pub fn sigma(i: usize, e: i64) -> Self {
        Letter(GeneratorKind::Sigma, Some(i), e)
    }

    pub fn gamma(j: usize, e: i64) -> Self {
        Letter(GeneratorKind::Gamma, Some(j), e)
    }

    pub fn gamma_bar(j: usize, e: i64) -> Self {
        Letter(GeneratorKind::GammaBar, Some(j), e)
    }

    pub fn eta(j: usize, e: i64) -> Self {
        Letter(GeneratorKind::Eta, Some(j), e)
    }

    pub fn delta(e: i64) -> Self {
        Letter(GeneratorKind::Delta, None, e)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            Some(i) => write!(f, "{}{}^{}", self.0.name(), i, self.2),
            None => write!(f, "{}^{}", self.0.name(), self.2),
        }
    }
}

/// A loop recorded as a word in the homology generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LoopWord(pub Vec<Letter>);

impl LoopWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Concatenation of loops.
    pub fn then(&self, other: &LoopWord) -> LoopWord {
        LoopWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Total exponent per generator; the local system only sees this.
    pub fn abelianized(&self) -> BTreeMap<(GeneratorKind, Option<usize>), i64> {
        let mut out = BTreeMap::new();
        for Letter(kind, idx, e) in &self.0 {
            *out.entry((*kind, *idx)).or_insert(0) += e;
        }
        out.retain(|_, e| *e != 0);
        out
    }
}

/// The covering parameters: `n` punctures, the last `k` of which are counted
/// with opposite orientation, and `l` components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairingParams {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// Weight of the configuration space; metadata only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl PairingParams {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        let p = Self { n, k, l, m: None };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k > self.n {
            return Err(Error::Parse(format!(
                "k = {} exceeds n = {}",
                self.k, self.n
            )));
        }
        Ok(())
    }

    pub fn context(&self) -> VarContext {
        VarContext::new(self.n, self.l)
    }
}

/// A signed intersection point with its loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairingPoint {
    pub sign: i8,
    #[serde(rename = "loop")]
    pub word: LoopWord,
}

/// Intersection data for one pairing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairingData {
    pub params: PairingParams,
    pub points: Vec<PairingPoint>,
}

impl PairingData {
    pub fn new(params: PairingParams, points: Vec<PairingPoint>) -> Result<Self> {
        let data = Self { params, points };
        data.validate()?;
        Ok(data)
    }

    /// Checks parameters, signs and every letter index.
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        for p in &self.points {
            if p.sign != 1 && p.sign != -1 {
                return Err(Error::Parse(format!(
                    "intersection sign {} is not ±1",
                    p.sign
                )));
            }
            for letter in p.word.letters() {
                check_letter(letter, &self.params)?;
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: Self =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("pairing data: {e}")))?;
        data.validate()?;
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pairing data serializes")
    }

    /// Union of point lists over the same parameters.
    pub fn concat(&self, other: &PairingData) -> Result<PairingData> {
        if self.params != other.params {
            return Err(Error::Parse(
                "cannot concatenate data with different parameters".into(),
            ));
        }
        Ok(PairingData {
            params: self.params,
            points: self.points.iter().chain(&other.points).cloned().collect(),
        })
    }

    /// The same points with every sign flipped.
    pub fn negated(&self) -> PairingData {
        PairingData {
            params: self.params,
            points: self
                .points
                .iter()
                .map(|p| PairingPoint {
                    sign: -p.sign,
                    word: p.word.clone(),
                })
                .collect(),
        }
    }
}

fn check_letter(letter: &Letter, params: &PairingParams) -> Result<()> {
    let Letter(kind, idx, _) = letter;
    let bound = match kind {
        GeneratorKind::Sigma => params.n,
        GeneratorKind::Gamma | GeneratorKind::GammaBar | GeneratorKind::Eta => params.l,
        GeneratorKind::Delta => {
            return match idx {
                None => Ok(()),
                Some(_) => Err(Error::Parse("delta takes no index".into())),
            };
        }
    };
    match idx {
        Some(i) if (1..=bound).contains(i) => Ok(()),
        Some(i) => Err(Error::IndexOutOfRange {
            kind: kind.name(),
            index: *i as i64,
            max: bound,
        }),
        None => Err(Error::Parse(format!("{} requires an index", kind.name()))),
    }
}

/// The local system `Φ(l)`: a signed monomial in `x`, `y` and `d`.
pub fn phi_evaluate(word: &LoopWord, params: &PairingParams) -> Result<LaurentPoly> {
    params.validate()?;
    let ctx = params.context();
    let mut exps = vec![0i64; ctx.arity()];
    let mut delta_total = 0i64;
    for letter in word.letters() {
        check_letter(letter, params)?;
        let Letter(kind, idx, e) = *letter;
        match kind {
            GeneratorKind::Sigma => {
                let i = idx.expect("checked");
                let orient = if i > params.n - params.k { -1 } else { 1 };
                exps[i - 1] += 2 * orient * e;
            }
            GeneratorKind::Gamma => exps[ctx.nx + idx.expect("checked") - 1] += 2 * e,
            GeneratorKind::GammaBar => exps[ctx.nx + idx.expect("checked") - 1] -= 2 * e,
            GeneratorKind::Eta => exps[ctx.nx + idx.expect("checked") - 1] += e,
            GeneratorKind::Delta => delta_total += e,
        }
    }
    // δ evaluates to d' = -d
    exps[ctx.arity() - 1] = delta_total;
    let sign = if delta_total.rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    LaurentPoly::term(ctx, sign, exps)
}

/// `Σ_x α_x Φ(l_x)`.
pub fn pairing_evaluate(data: &PairingData) -> Result<LaurentPoly> {
    data.validate()?;
    let mut acc = LaurentPoly::zero(data.params.context());
    for p in &data.points {
        let phi = phi_evaluate(&p.word, &data.params)?;
        if p.sign > 0 {
            acc += &phi;
        } else {
            acc = acc - phi;
        }
    }
    Ok(acc)
}

/// Intersection data encoding `∏_{k=1}^{l} (y_k - y_k^{-1})`.
///
/// For each component there are two points: `q_k` with sign `+1` and loop
/// `γ_k η_k^{-1}` (grading `y_k`), and `r_k` with sign `-1` and loop
/// `η_k^{-1}` (grading `-y_k^{-1}`). The product over components gives
/// `2^l` points, enumerated with `q` before `r` in each slot.
pub fn kirby_circle_fixture(l: usize) -> Result<PairingData> {
    if l == 0 {
        return Err(Error::Parse("Kirby circle fixture needs l >= 1".into()));
    }
    let params = PairingParams::new(0, 0, l)?;
    let mut points = vec![PairingPoint {
        sign: 1,
        word: LoopWord::default(),
    }];
    for k in 1..=l {
        let q_k = (1i8, vec![Letter::gamma(k, 1), Letter::eta(k, -1)]);
        let r_k = (-1i8, vec![Letter::eta(k, -1)]);
        points = points
            .into_iter()
            .flat_map(|p| {
                [&q_k, &r_k].into_iter().map(move |(s, w)| PairingPoint {
                    sign: p.sign * s,
                    word: p.word.then(&LoopWord::new(w.clone())),
                })
            })
            .collect();
    }
    PairingData::new(params, points)
}
