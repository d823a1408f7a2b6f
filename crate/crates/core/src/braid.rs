//! Braid words, their closures and the framed linking matrix.
//!
//! Crossing convention: the generator `σ_i` (letter `+i`) is a positive
//! crossing between the strands at positions `i` and `i+1`; letter `-i` is
//! its inverse. Letters are applied left to right, top to bottom.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        for &g in &word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(Error::IndexOutOfRange {
                    kind: "generator",
                    index: g as i64,
                    max: strands - 1,
                });
            }
        }
        Ok(Self { strands, word })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed generators, e.g. `"1 -2 1"`.
    ///
    /// Without an explicit strand count the braid uses the fewest strands
    /// that fit the word (one strand for the empty word).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let word = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let needed = word
            .iter()
            .map(|g| g.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        Self::new(strands.unwrap_or(needed), word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            word: self.word.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Reverses every crossing sign.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            word: self.word.iter().map(|g| -g).collect(),
        }
    }

    /// Concatenation `self · other` on the same number of strands.
    pub fn then(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Parse("strand counts differ".into()));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(Self {
            strands: self.strands,
            word,
        })
    }

    /// The same word on `extra` more strands.
    pub fn widen(&self, extra: usize) -> Self {
        Self {
            strands: self.strands + extra,
            word: self.word.clone(),
        }
    }

    /// `at[p]` is the strand (0-based top position) found at position `p`
    /// after the prefix of length `upto`.
    pub fn strands_at(&self, upto: usize) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word[..upto] {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        at
    }

    /// Underlying permutation: strand starting at position `p` ends at `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let at = self.strands_at(self.word.len());
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Components of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureData {
    /// Number of link components `l`.
    pub components: usize,
    /// 1-based component of each strand.
    pub colouring: Vec<usize>,
    /// Smallest strand (1-based) of each component, in component order.
    pub representatives: Vec<usize>,
}

/// Cycles of the braid permutation, numbered by smallest strand.
pub fn closure_components(braid: &BraidWord) -> ClosureData {
    let perm = braid.permutation();
    let n = braid.strands();
    let mut colouring = vec![0usize; n];
    let mut representatives = Vec::new();
    for start in 0..n {
        if colouring[start] != 0 {
            continue;
        }
        representatives.push(start + 1);
        let comp = representatives.len();
        let mut s = start;
        while colouring[s] == 0 {
            colouring[s] = comp;
            s = perm[s];
        }
    }
    ClosureData {
        components: representatives.len(),
        colouring,
        representatives,
    }
}

/// Pairwise linking numbers and per-component writhe of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingData {
    pub linking: Vec<Vec<i64>>,
    pub writhe: Vec<i64>,
}

pub fn linking_numbers(braid: &BraidWord, closure: &ClosureData) -> Result<CrossingData> {
    let l = closure.components;
    let mut twice = vec![vec![0i64; l]; l];
    let mut writhe = vec![0i64; l];
    let mut at: Vec<usize> = (0..braid.strands()).collect();
    for &g in braid.word() {
        let i = g.unsigned_abs() as usize;
        let sign = g.signum() as i64;
        let a = closure.colouring[at[i - 1]] - 1;
        let b = closure.colouring[at[i]] - 1;
        if a == b {
            writhe[a] += sign;
        } else {
            twice[a][b] += sign;
            twice[b][a] += sign;
        }
        at.swap(i - 1, i);
    }
    for a in 0..l {
        for b in 0..l {
            if twice[a][b] % 2 != 0 {
                return Err(Error::ParityViolation {
                    a: a + 1,
                    b: b + 1,
                    count: twice[a][b],
                });
            }
        }
    }
    let linking = twice
        .into_iter()
        .map(|row| row.into_iter().map(|v| v / 2).collect())
        .collect();
    Ok(CrossingData { linking, writhe })
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Exact inertia of a symmetric integer matrix by congruence diagonalization over `Q`.
pub fn signature(matrix: &[Vec<i64>]) -> Result<Inertia> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse(format!("row {i} has length {}", row.len())));
        }
        for j in 0..i {
            if row[j] != matrix[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !a.is_empty() {
        let m = a.len();
        let pivot = match (0..m).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..m)
                    .flat_map(|i| (0..m).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    inertia.zero += m;
                    break;
                };
                // congruence e_i -> e_i + e_j makes the (i, i) entry 2 a_ij
                for k in 0..m {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..m {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        if p.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        let rest: Vec<usize> = (0..m).filter(|&k| k != pivot).collect();
        let next: Vec<Vec<BigRational>> = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - &a[r][pivot] * &a[pivot][c] / &p)
                    .collect()
            })
            .collect();
        a = next;
    }
    Ok(inertia)
}

/// A framed link presented as a braid closure, with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPresentation {
    braid: BraidWord,
    framings: Vec<i64>,
    closure: ClosureData,
    crossings: CrossingData,
}

impl LinkPresentation {
    pub fn new(braid: BraidWord, framings: Vec<i64>) -> Result<Self> {
        let closure = closure_components(&braid);
        if framings.len() != closure.components {
            return Err(Error::ColourMismatch(format!(
                "{} framings for a {}-component link",
                framings.len(),
                closure.components
            )));
        }
        let crossings = linking_numbers(&braid, &closure)?;
        Ok(Self {
            braid,
            framings,
            closure,
            crossings,
        })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn components(&self) -> usize {
        self.closure.components
    }

    pub fn closure(&self) -> &ClosureData {
        &self.closure
    }

    /// 1-based component of each strand.
    pub fn colouring(&self) -> &[usize] {
        &self.closure.colouring
    }

    pub fn representatives(&self) -> &[usize] {
        &self.closure.representatives
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.crossings.linking
    }

    pub fn writhe(&self) -> &[i64] {
        &self.crossings.writhe
    }

    /// Framing minus total linking with the other components, per component.
    pub fn framing_corrections(&self) -> Vec<i64> {
        self.framings
            .iter()
            .zip(&self.crossings.linking)
            .map(|(f, row)| f - row.iter().sum::<i64>())
            .collect()
    }

    /// `B_ii = f_i`, `B_ij = lk_ij`.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let mut b = self.crossings.linking.clone();
        for (i, f) in self.framings.iter().enumerate() {
            b[i][i] = *f;
        }
        b
    }

    pub fn inertia(&self) -> Inertia {
        signature(&self.linking_matrix()).expect("linking matrix is symmetric")
    }

    /// Disjoint union with a distant unknot of the given framing.
    pub fn with_distant_unknot(&self, framing: i64) -> Self {
        let mut framings = self.framings.clone();
        framings.push(framing);
        Self::new(self.braid.widen(1), framings).expect("distant strand is a new component")
    }

    pub fn to_record(&self) -> PresentationRecord {
        PresentationRecord {
            strands: self.braid.strands(),
            word: self.braid.word().to_vec(),
            framings: self.framings.clone(),
        }
    }

    pub fn from_record(rec: &PresentationRecord) -> Result<Self> {
        Self::new(
            BraidWord::new(rec.strands, rec.word.clone())?,
            rec.framings.clone(),
        )
    }
}

/// Structured `{strands, word, framings}` form of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub strands: usize,
    pub word: Vec<i32>,
    pub framings: Vec<i64>,
}

/// Text form `"<strands>: <word> | <framings>"`, e.g. `"2: 1 1 | 0 0"`.
impl fmt::Display for LinkPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fr: Vec<String> = self.framings.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{}: {} | {}",
            self.braid.strands(),
            self.braid,
            fr.join(" ")
        )
    }
}

impl FromStr for LinkPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let (word, framings) = rest
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        let strands = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {head:?}")))?;
        Self::new(
            BraidWord::parse(word, Some(strands))?,
            parse_int_list(framings)?,
        )
    }
}

/// Parses whitespace- or comma-separated integers.
pub fn parse_int_list<T: FromStr>(text: &str) -> Result<Vec<T>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}
