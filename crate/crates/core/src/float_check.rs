//! Independent floating-point pipeline for cross-checking exact results.
//!
//! The braiding is rebuilt here from dense `E`, `F`, `K` matrices evaluated at
//! `q^{1/2} = e^{iπ/2N}`, as `flip ∘ q^{H⊗H/2} Σ_n q^{n(n-1)/2}(q - q^{-1})^n/[n]! F^n ⊗ E^n`,
//! so it shares no entry formulas with the exact code. Inverse blocks are
//! obtained by numerical inversion.

use num_complex::Complex64;

use crate::braid::LinkPresentation;
use crate::error::{Error, Result};
use crate::quantum_rep::FramingConvention;
use crate::wrt::colour_tuples;

/// Relative tolerance of the float cross-check.
pub const CROSSCHECK_TOLERANCE: f64 = 1e-6;

type Dense = Vec<Vec<Complex64>>;

fn zeros(n: usize) -> Dense {
    vec![vec![Complex64::new(0.0, 0.0); n]; n]
}

fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> Dense {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Gauss–Jordan inversion with partial pivoting.
fn invert(m: &Dense) -> Result<Dense> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("non-empty range");
        if a[pivot][col].norm() < 1e-12 {
            return Err(Error::Internal(
                "singular braiding block in float pipeline".into(),
            ));
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for i in 0..n {
            if i != col {
                let f = a[i][col];
                if f != Complex64::new(0.0, 0.0) {
                    for j in 0..n {
                        let (ac, ic) = (a[col][j], inv[col][j]);
                        a[i][j] -= f * ac;
                        inv[i][j] -= f * ic;
                    }
                }
            }
        }
    }
    Ok(inv)
}

/// Numerical evaluation point `q^{1/2}` with its derived quantities.
#[derive(Debug, Clone, Copy)]
pub struct FloatQ {
    pub half: Complex64,
}

impl FloatQ {
    /// `q^{1/2} = e^{iπ/2N}`, so that `q = ξ = e^{2πi/2N}`.
    pub fn at_level(level: u32) -> Self {
        Self {
            half: Complex64::from_polar(1.0, std::f64::consts::PI / (2.0 * level as f64)),
        }
    }

    /// `q^{h/2}`.
    pub fn half_pow(&self, h: i64) -> Complex64 {
        self.half.powi(h as i32)
    }

    pub fn q(&self) -> Complex64 {
        self.half * self.half
    }

    /// `[n] = (q^n - q^{-n}) / (q - q^{-1})`, as a sum to stay finite at roots of unity.
    pub fn bracket(&self, n: i64) -> Complex64 {
        (0..n).map(|i| self.half_pow(2 * (n - 1 - 2 * i))).sum()
    }
}

fn module_matrices(q: FloatQ, n: usize) -> (Dense, Dense, Dense) {
    let lam = n as i64 - 1;
    let (mut e, mut f, mut k) = (zeros(n), zeros(n), zeros(n));
    for i in 0..n {
        k[i][i] = q.half_pow(2 * (lam - 2 * i as i64));
        if i + 1 < n {
            f[i + 1][i] = q.bracket(i as i64 + 1);
        }
        if i >= 1 {
            e[i - 1][i] = q.bracket(lam - i as i64 + 1);
        }
    }
    (e, f, k)
}

/// Normalized braiding `V_a ⊗ V_b -> V_b ⊗ V_a` as a dense matrix, rows
/// indexed `t' * a + s'` and columns `s * b + t`.
pub fn float_r_matrix(q: FloatQ, a: usize, b: usize) -> Dense {
    let (_, fa, _) = module_matrices(q, a);
    let (eb, _, _) = module_matrices(q, b);
    let dim = a * b;
    let mut sum = zeros(dim);
    let brace = q.q() - q.q().inv();
    let (mut fa_n, mut eb_n) = (identity(a), identity(b));
    let mut factorial = Complex64::new(1.0, 0.0);
    for n in 0..a.max(b) as i64 {
        if n > 0 {
            fa_n = matmul(&fa_n, &fa);
            eb_n = matmul(&eb_n, &eb);
            factorial *= q.bracket(n);
        }
        let c = q.half_pow(n * (n - 1)) * brace.powi(n as i32) / factorial;
        let term = kron(&fa_n, &eb_n);
        for i in 0..dim {
            for j in 0..dim {
                sum[i][j] += c * term[i][j];
            }
        }
    }
    let (la, lb) = (a as i64 - 1, b as i64 - 1);
    let mut out = zeros(dim);
    for s in 0..a {
        for t in 0..b {
            let h = (la - 2 * s as i64) * (lb - 2 * t as i64) - la * lb;
            let diag = q.half_pow(h);
            for j in 0..dim {
                out[t * a + s][j] = diag * sum[s * b + t][j];
            }
        }
    }
    out
}

fn decode(mut flat: usize, colours: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; colours.len()];
    for k in (0..colours.len()).rev() {
        idx[k] = flat % colours[k];
        flat /= colours[k];
    }
    idx
}

fn encode(idx: &[usize], colours: &[usize]) -> usize {
    idx.iter().zip(colours).fold(0, |acc, (i, c)| acc * c + i)
}

/// `Σ_ī μ(ī) ρ(β)_{ī,ī}` in complex doubles.
pub fn float_trace(
    q: FloatQ,
    link: &LinkPresentation,
    strand_colours: &[usize],
) -> Result<Complex64> {
    let n = strand_colours.len();
    let dim: usize = strand_colours.iter().product();
    let mut blocks: Vec<(usize, Dense, usize, usize)> = Vec::new();
    let mut cur = strand_colours.to_vec();
    for &g in link.braid().word() {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (cur[i], cur[i + 1]);
        let m = if g > 0 {
            float_r_matrix(q, a, b)
        } else {
            invert(&float_r_matrix(q, b, a))?
        };
        blocks.push((i, m, a, b));
        cur.swap(i, i + 1);
    }
    let mut total = Complex64::new(0.0, 0.0);
    for start in 0..dim {
        let mut cols = strand_colours.to_vec();
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        v[start] = Complex64::new(1.0, 0.0);
        for (i, m, a, b) in &blocks {
            let mut next_cols = cols.clone();
            next_cols.swap(*i, *i + 1);
            let mut out = vec![Complex64::new(0.0, 0.0); dim];
            for (flat, coeff) in v.iter().enumerate() {
                if coeff.norm() == 0.0 {
                    continue;
                }
                let idx = decode(flat, &cols);
                let src = idx[*i] * b + idx[*i + 1];
                for r in 0..a * b {
                    let c = m[r][src];
                    if c.norm() == 0.0 {
                        continue;
                    }
                    let mut o = idx.clone();
                    o[*i] = r / a;
                    o[*i + 1] = r % a;
                    out[encode(&o, &next_cols)] += c * coeff;
                }
            }
            v = out;
            cols = next_cols;
        }
        let idx = decode(start, strand_colours);
        let weight: i64 = (0..n)
            .map(|k| 2 * idx[k] as i64 - (strand_colours[k] as i64 - 1))
            .sum();
        total += q.half_pow(2 * weight) * v[start];
    }
    Ok(total)
}

fn float_framing(
    q: FloatQ,
    link: &LinkPresentation,
    colours: &[u32],
    convention: FramingConvention,
) -> Complex64 {
    let lam: Vec<i64> = colours.iter().map(|&c| c as i64 - 1).collect();
    let l = lam.len();
    match convention {
        FramingConvention::PaperLiteral => {
            let e: i64 = (0..l)
                .map(|i| {
                    let lk: i64 = (0..l)
                        .filter(|&j| j != i)
                        .map(|j| link.linking()[i][j])
                        .sum();
                    (link.framings()[i] - lk) * lam[i]
                })
                .sum();
            q.half_pow(2 * e)
        }
        FramingConvention::Ribbon => {
            // θ^{f-w} per component times the undone per-crossing normalization
            let mut z = Complex64::new(1.0, 0.0);
            for i in 0..l {
                let theta = q.half_pow(lam[i] * (lam[i] + 2));
                z *= theta.powi((link.framings()[i] - link.writhe()[i]) as i32);
                z *= q.half_pow(link.writhe()[i] * lam[i] * lam[i]);
                for j in i + 1..l {
                    z *= q.half_pow(2 * link.linking()[i][j] * lam[i] * lam[j]);
                }
            }
            z
        }
    }
}

/// Coloured Jones polynomial evaluated at `q^{1/2} = q.half`.
pub fn float_coloured_jones(
    q: FloatQ,
    link: &LinkPresentation,
    colours: &[u32],
    convention: FramingConvention,
) -> Result<Complex64> {
    let strand: Vec<usize> = link
        .colouring()
        .iter()
        .map(|&c| colours[c - 1] as usize)
        .collect();
    Ok(float_framing(q, link, colours, convention) * float_trace(q, link, &strand)?)
}

fn float_kirby_sum(
    q: FloatQ,
    link: &LinkPresentation,
    level: u32,
    convention: FramingConvention,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for colours in colour_tuples(link.components(), level) {
        let coeff: Complex64 = colours.iter().map(|&c| q.bracket(c as i64)).product();
        acc += coeff * float_coloured_jones(q, link, &colours, convention)?;
    }
    Ok(acc)
}

/// `τ_N(M)` entirely in complex doubles.
pub fn float_tau(
    link: &LinkPresentation,
    level: u32,
    convention: FramingConvention,
) -> Result<Complex64> {
    let q = FloatQ::at_level(level);
    let unknot = |f: i64| -> Result<Complex64> {
        let u = LinkPresentation::new(crate::braid::BraidWord::identity(1)?, vec![f])?;
        float_kirby_sum(q, &u, level, convention)
    };
    let (dp, dm) = (unknot(1)?, unknot(-1)?);
    if dp.norm() < 1e-12 || dm.norm() < 1e-12 {
        return Err(Error::ZeroNormalizer("Δ±"));
    }
    let d = dp.norm();
    let inertia = link.inertia();
    let raw = float_kirby_sum(q, link, level, convention)?;
    Ok(raw
        / (d.powi(inertia.zero as i32)
            * dp.powi(inertia.positive as i32)
            * dm.powi(inertia.negative as i32)))
}

/// `|a - b| <= tol * max(1, |a|)`.
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(1.0)
}
