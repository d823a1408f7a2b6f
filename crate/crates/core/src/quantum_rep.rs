//! Weight-basis braid representation of `U_q(sl_2)` and the coloured Jones
//! state sum over multi-indices.
//!
//! `V_N` has basis `v_0..v_{N-1}` with `K v_i = q^{N-1-2i} v_i`,
//! `F v_i = [i+1] v_{i+1}` and `E v_i = [N-i] v_{i-1}`. The braiding on
//! `V_a ⊗ V_b` is the flip composed with
//!
//! ```text
//! q^{-(a-1)(b-1)/2} q^{H⊗H/2} Σ_n q^{n(n-1)/2} (q - q^{-1})^n / [n]! F^n ⊗ E^n
//! ```
//!
//! which makes `K^{-1}` the pivotal element: the partial quantum trace of the
//! unnormalized braiding on `V_N ⊗ V_N` is the twist `q^{(N^2-1)/2}`.
//!
//! The scalar prefactor keeps every entry in `Z[q^{±1}]`; the framing factor
//! of the [`FramingConvention::Ribbon`] convention compensates for it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, LinkPresentation};
use crate::error::{Error, Result};
use crate::qpoly::{quantum_binomial, quantum_integer, QPoly, QuantumMode};

/// One braiding block `V_a ⊗ V_b -> V_b ⊗ V_a`.
///
/// `rows[s * b + t]` lists the image of `v_s ⊗ w_t` as pairs
/// `(t' * a + s', coefficient)` for the target basis `w_{t'} ⊗ v_{s'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBlock {
    pub a: u32,
    pub b: u32,
    pub inverse: bool,
    pub rows: Vec<Vec<(usize, QPoly)>>,
}

impl RBlock {
    /// Dense matrix with rows indexed by the target basis, columns by the source.
    pub fn to_dense(&self) -> Vec<Vec<QPoly>> {
        let dim = (self.a * self.b) as usize;
        let mut m = vec![vec![QPoly::zero(); dim]; dim];
        for (src, row) in self.rows.iter().enumerate() {
            for (dst, c) in row {
                m[*dst][src] = c.clone();
            }
        }
        m
    }
}

fn bracket(n: i64) -> QPoly {
    quantum_integer(n, QuantumMode::Bracket).expect("non-negative")
}

/// Coefficient of `v_{s+n} ⊗ w_{t-n}` in the normalized `R(v_s ⊗ w_t)`.
fn r_entry(a: u32, b: u32, s: u32, t: u32, n: u32) -> QPoly {
    let (la, lb) = (a as i64 - 1, b as i64 - 1);
    let brace_one = quantum_integer(1, QuantumMode::Brace).expect("non-negative");
    let mut c = QPoly::q_pow((n as i64) * (n as i64 - 1) / 2) * brace_one.pow(n);
    c = c * quantum_binomial(s + n, n);
    for u in 1..=n as i64 {
        c = c * bracket(lb - t as i64 + u);
    }
    let (s2, t2) = ((s + n) as i64, (t - n) as i64);
    c.shift_half(2 * (-s2 * lb - t2 * la + 2 * s2 * t2))
}

fn forward_rows(a: u32, b: u32) -> Vec<Vec<(usize, QPoly)>> {
    let mut rows = Vec::with_capacity((a * b) as usize);
    for s in 0..a {
        for t in 0..b {
            let mut row = Vec::new();
            for n in 0..=t.min(a - 1 - s) {
                let dst = ((t - n) * a + (s + n)) as usize;
                row.push((dst, r_entry(a, b, s, t, n)));
            }
            rows.push(row);
        }
    }
    rows
}

/// Inverse of the braiding `V_b ⊗ V_a -> V_a ⊗ V_b`, solved by back-substitution.
///
/// The forward map sends `u_k ⊗ v_j` to a monomial multiple of `v_j ⊗ u_k`
/// plus terms `v_{j-n} ⊗ u_{k+n}` with `n >= 1`, so it is triangular in `j`.
fn inverse_rows(a: u32, b: u32) -> Vec<Vec<(usize, QPoly)>> {
    let fwd = forward_rows(b, a);
    // solved[j * b + k] = preimage of v_j ⊗ u_k, keyed by source index k * a + j
    let mut solved: Vec<Option<BTreeMap<usize, QPoly>>> = vec![None; (a * b) as usize];
    for j in 0..a {
        for k in 0..b {
            let src = (k * a + j) as usize;
            let mut acc: BTreeMap<usize, QPoly> = BTreeMap::new();
            acc.insert(src, QPoly::one());
            let mut diag = None;
            for (dst, c) in &fwd[src] {
                let (jj, kk) = ((*dst as u32) / b, (*dst as u32) % b);
                if jj == j {
                    diag = Some(c.clone());
                    continue;
                }
                let prev = solved[(jj * b + kk) as usize]
                    .as_ref()
                    .expect("lower rows solved first");
                for (key, v) in prev {
                    let e = acc.entry(*key).or_default();
                    *e = &*e - &(c * v);
                }
            }
            let diag = diag.expect("diagonal term present");
            let (coeff, h) = diag.as_monomial().expect("diagonal entry is a monomial");
            let unit = QPoly::half_monomial(coeff.clone(), -h);
            let sol = acc
                .into_iter()
                .map(|(key, v)| (key, &v * &unit))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            solved[(j * b + k) as usize] = Some(sol);
        }
    }
    solved
        .into_iter()
        .map(|m| m.expect("all rows solved").into_iter().collect())
        .collect()
}

/// Braiding block on `V_a ⊗ V_b`; with `inverse` set it is the inverse of the
/// braiding `V_b ⊗ V_a -> V_a ⊗ V_b`.
pub fn r_matrix(a: u32, b: u32, inverse: bool) -> Result<RBlock> {
    if a == 0 || b == 0 {
        return Err(Error::ColourMismatch("colours must be positive".into()));
    }
    let rows = if inverse {
        inverse_rows(a, b)
    } else {
        forward_rows(a, b)
    };
    Ok(RBlock {
        a,
        b,
        inverse,
        rows,
    })
}

/// A basis multi-index `(i_1, ..., i_n)`.
pub type WeightIndex = Vec<u32>;

/// All multi-indices with `0 <= i_k < colours[k]`, lexicographically.
pub fn weight_indices(colours: &[u32]) -> Vec<WeightIndex> {
    let mut out = vec![Vec::with_capacity(colours.len())];
    for &c in colours {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..c).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

fn check_index(index: &[u32], colours: &[u32]) -> Result<()> {
    if index.len() != colours.len() || index.iter().zip(colours).any(|(i, c)| i >= c) {
        return Err(Error::Inadmissible {
            index: index.to_vec(),
            colours: colours.to_vec(),
        });
    }
    Ok(())
}

/// Cap weight of `K^{-1}` on `v_{i_1} ⊗ ... ⊗ v_{i_n}`: `q^{-Σ(C_k - 1 - 2 i_k)}`.
pub fn mu_weight(index: &[u32], colours: &[u32]) -> Result<QPoly> {
    check_index(index, colours)?;
    let e: i64 = index
        .iter()
        .zip(colours)
        .map(|(&i, &c)| 2 * i as i64 - (c as i64 - 1))
        .sum();
    Ok(QPoly::q_pow(e))
}

/// Sparse vector in the tensor product, keyed by multi-index.
pub type StateVector = BTreeMap<WeightIndex, QPoly>;

/// `ρ(β)` on `V_{C_1} ⊗ ... ⊗ V_{C_n}`, stored as its sequence of generator blocks.
#[derive(Debug, Clone)]
pub struct BraidRepOperator {
    braid: BraidWord,
    colours: Vec<u32>,
    steps: Vec<(usize, Arc<RBlock>)>,
}

impl BraidRepOperator {
    /// `colours[k]` is the colour of the strand starting at position `k + 1`;
    /// it must be constant along closure components.
    pub fn new(braid: &BraidWord, colours: &[u32]) -> Result<Self> {
        let n = braid.strands();
        if colours.len() != n {
            return Err(Error::ColourMismatch(format!(
                "{} colours for {} strands",
                colours.len(),
                n
            )));
        }
        if colours.contains(&0) {
            return Err(Error::ColourMismatch("colours must be positive".into()));
        }
        let perm = braid.permutation();
        for k in 0..n {
            if colours[perm[k]] != colours[k] {
                return Err(Error::InconsistentColouring(format!(
                    "strand {} (colour {}) closes onto position {} (colour {})",
                    k + 1,
                    colours[k],
                    perm[k] + 1,
                    colours[perm[k]]
                )));
            }
        }
        let mut cache: HashMap<(u32, u32, bool), Arc<RBlock>> = HashMap::new();
        let mut at: Vec<usize> = (0..n).collect();
        let mut steps = Vec::with_capacity(braid.len());
        for &g in braid.word() {
            let i = g.unsigned_abs() as usize - 1;
            let key = (colours[at[i]], colours[at[i + 1]], g < 0);
            let block = match cache.get(&key) {
                Some(b) => Arc::clone(b),
                None => {
                    let b = Arc::new(r_matrix(key.0, key.1, key.2)?);
                    cache.insert(key, Arc::clone(&b));
                    b
                }
            };
            steps.push((i, block));
            at.swap(i, i + 1);
        }
        Ok(Self {
            braid: braid.clone(),
            colours: colours.to_vec(),
            steps,
        })
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn dimension(&self) -> usize {
        self.colours.iter().map(|&c| c as usize).product()
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        let mut cur = v.clone();
        for (slot, block) in &self.steps {
            let (a, b) = (block.a as usize, block.b as usize);
            let mut next = StateVector::new();
            for (idx, coeff) in &cur {
                let (s, t) = (idx[*slot] as usize, idx[*slot + 1] as usize);
                for (dst, c) in &block.rows[s * b + t] {
                    let mut out = idx.clone();
                    out[*slot] = (dst / a) as u32;
                    out[*slot + 1] = (dst % a) as u32;
                    let e = next.entry(out).or_default();
                    *e += &(coeff * c);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        cur
    }

    pub fn apply_basis(&self, index: &[u32]) -> Result<StateVector> {
        check_index(index, &self.colours)?;
        let mut v = StateVector::new();
        v.insert(index.to_vec(), QPoly::one());
        Ok(self.apply(&v))
    }

    /// Diagonal entry `ρ(β)_{ī, ī}`.
    pub fn diagonal_entry(&self, index: &[u32]) -> Result<QPoly> {
        let img = self.apply_basis(index)?;
        Ok(img.get(index).cloned().unwrap_or_default())
    }
}

/// `ρ(β)_{ī,ī}` for a braid coloured strand-wise.
pub fn lambda_summand(braid: &BraidWord, colours: &[u32], index: &[u32]) -> Result<QPoly> {
    BraidRepOperator::new(braid, colours)?.diagonal_entry(index)
}

/// How the framing of each component enters the coloured Jones polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FramingConvention {
    /// `q^{Σ (f_i - Σ_j lk_ij)(N_i - 1)}`, the linear exponent printed with
    /// the homological state-sum formula.
    PaperLiteral,
    /// Twist eigenvalue `q^{(N^2-1)/2}` per unit of framing, plus the
    /// correction for the normalized braiding.
    Ribbon,
}

impl FramingConvention {
    pub const ALL: [FramingConvention; 2] =
        [FramingConvention::PaperLiteral, FramingConvention::Ribbon];

    pub fn name(&self) -> &'static str {
        match self {
            FramingConvention::PaperLiteral => "paper-literal",
            FramingConvention::Ribbon => "ribbon",
        }
    }
}

impl fmt::Display for FramingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FramingConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-literal" | "paper" | "literal" => Ok(FramingConvention::PaperLiteral),
            "ribbon" => Ok(FramingConvention::Ribbon),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}

/// Strand colours `C_k = N_{C(k)}` induced by per-component colours.
pub fn strand_colours(link: &LinkPresentation, colours: &[u32]) -> Result<Vec<u32>> {
    if colours.len() != link.components() {
        return Err(Error::ColourMismatch(format!(
            "{} colours for a {}-component link",
            colours.len(),
            link.components()
        )));
    }
    if colours.contains(&0) {
        return Err(Error::ColourMismatch("colours must be positive".into()));
    }
    Ok(link.colouring().iter().map(|&c| colours[c - 1]).collect())
}

/// Framing factor as a monomial in `q^{1/2}`.
pub fn framing_factor(
    link: &LinkPresentation,
    colours: &[u32],
    convention: FramingConvention,
) -> QPoly {
    let lam: Vec<i64> = colours.iter().map(|&c| c as i64 - 1).collect();
    match convention {
        FramingConvention::PaperLiteral => {
            let e = link
                .framing_corrections()
                .iter()
                .zip(&lam)
                .map(|(g, l)| g * l)
                .sum();
            QPoly::q_pow(e)
        }
        FramingConvention::Ribbon => {
            let mut half = 0i64;
            for (i, li) in lam.iter().enumerate() {
                half += link.framings()[i] * li * (li + 2);
                half -= 2 * link.writhe()[i] * li;
                for (j, lj) in lam.iter().enumerate().skip(i + 1) {
                    half += 2 * link.linking()[i][j] * li * lj;
                }
            }
            QPoly::half_monomial(1, half)
        }
    }
}

/// One row of the per-index audit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub index: WeightIndex,
    /// `μ(ī) · ρ(β)_{ī,ī}`.
    pub contribution: QPoly,
}

/// Coloured Jones polynomial with its state-sum decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredJonesResult {
    pub value: QPoly,
    pub framing_factor: QPoly,
    pub convention: FramingConvention,
    pub summands: Vec<Summand>,
}

/// Serialized summand: multi-index plus rendered contribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRecord {
    pub index: Vec<u32>,
    pub contribution: String,
}

impl ColouredJonesResult {
    pub fn summand_records(&self) -> Vec<SummandRecord> {
        self.summands
            .iter()
            .map(|s| SummandRecord {
                index: s.index.clone(),
                contribution: s.contribution.to_string(),
            })
            .collect()
    }
}

/// Unreduced coloured Jones polynomial `J_{N_1..N_l}(L, q)` of a framed braid closure.
pub fn coloured_jones(
    link: &LinkPresentation,
    colours: &[u32],
    convention: FramingConvention,
) -> Result<ColouredJonesResult> {
    let strand = strand_colours(link, colours)?;
    let op = BraidRepOperator::new(link.braid(), &strand)?;
    let summands = weight_indices(&strand)
        .into_par_iter()
        .map(|index| {
            let diag = op.diagonal_entry(&index)?;
            let contribution = &mu_weight(&index, &strand)? * &diag;
            Ok(Summand {
                index,
                contribution,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let trace: QPoly = summands.iter().map(|s| s.contribution.clone()).sum();
    let factor = framing_factor(link, colours, convention);
    Ok(ColouredJonesResult {
        value: &factor * &trace,
        framing_factor: factor,
        convention,
        summands,
    })
}
