//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quantinv::braid::{BraidWord, LinkPresentation};
use quantinv::qpoly::QPoly;
use quantinv::quantum_rep::{framing_factor, FramingConvention};

pub type Mat = Vec<Vec<QPoly>>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Dense linear algebra over Z[q^{±1/2}]
// ---------------------------------------------------------------------------

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![QPoly::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = QPoly::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = zeros(a.len(), b[0].len());
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += &(aik * bkj);
                }
            }
        }
    }
    out
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, s: &QPoly) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| x * s).collect())
        .collect()
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca, rb, cb) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn is_identity(m: &Mat) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// Exact quotient `p / d` in `Z[q^{±1/2}]`; panics when `d` does not divide `p`.
pub fn div_exact(p: &QPoly, d: &QPoly) -> QPoly {
    let (dh, dc) = {
        let (h, c) = d.half_terms().next_back().expect("nonzero divisor");
        (h, c.clone())
    };
    let mut rem = p.clone();
    let mut quot = QPoly::zero();
    let low =
        p.half_terms().next().map_or(0, |(h, _)| h) - d.half_terms().map(|(h, _)| h).max().unwrap();
    loop {
        let lead = rem.half_terms().next_back().map(|(h, c)| (h, c.clone()));
        let Some((h, c)) = lead else { break };
        assert!(h - dh >= low, "{d} does not divide {p}");
        let (qc, r) = c.div_rem(&dc);
        assert!(r.is_zero(), "{d} does not divide {p}");
        let t = QPoly::half_monomial(qc, h - dh);
        rem = &rem - &(&t * d);
        quot += &t;
    }
    quot
}

fn qint(n: i64) -> QPoly {
    // [n] = (q^n - q^{-n}) / (q - q^{-1}), built as a sum.
    (0..n).map(|k| QPoly::q_pow(n - 1 - 2 * k)).sum()
}

fn qfact(n: i64) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &qint(k))
}

// ---------------------------------------------------------------------------
// Dense R-matrix oracle
// ---------------------------------------------------------------------------

/// `F` on `V_n`: `F v_i = [i+1] v_{i+1}`.
pub fn f_mat(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m[i + 1][i] = qint(i as i64 + 1);
    }
    m
}

/// `E` on `V_n`: `E v_i = [n-i] v_{i-1}`.
pub fn e_mat(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for i in 1..n {
        m[i - 1][i] = qint((n - i) as i64);
    }
    m
}

/// Weight `H v_i = (n - 1 - 2i) v_i`.
fn h_weight(n: usize, i: usize) -> i64 {
    n as i64 - 1 - 2 * i as i64
}

/// Pieces of the braiding on `V_a ⊗ V_b` with source index `s*b + t`:
/// `R = P · D · S` with `S` unipotent, `D` diagonal monomial, `P` the flip.
struct RFactors {
    p: Mat,
    d: Vec<QPoly>,
    s: Mat,
}

fn r_factors(a: usize, b: usize) -> RFactors {
    let dim = a * b;
    let (f, e) = (f_mat(a), e_mat(b));
    let mut s = identity(dim);
    let mut fpow = identity(a);
    let mut epow = identity(b);
    let qmq = &QPoly::q_pow(1) - &QPoly::q_pow(-1);
    for n in 1..a.max(b) {
        fpow = mat_mul(&fpow, &f);
        epow = mat_mul(&epow, &e);
        let fact = qfact(n as i64);
        let coeff = &QPoly::half_monomial(1, (n * (n - 1)) as i64) * &qmq.pow(n as u32);
        let term: Mat = kron(&fpow, &epow)
            .iter()
            .map(|row| row.iter().map(|x| &div_exact(x, &fact) * &coeff).collect())
            .collect();
        s = mat_add(&s, &term);
    }
    let shift = -((a as i64 - 1) * (b as i64 - 1));
    let d = (0..dim)
        .map(|k| {
            let (i, j) = (k / b, k % b);
            QPoly::half_monomial(1, h_weight(a, i) * h_weight(b, j) + shift)
        })
        .collect();
    let mut p = zeros(dim, dim);
    for i in 0..a {
        for j in 0..b {
            p[j * a + i][i * b + j] = QPoly::one();
        }
    }
    RFactors { p, d, s }
}

/// Dense braiding `V_a ⊗ V_b -> V_b ⊗ V_a`.
pub fn dense_r(a: usize, b: usize) -> Mat {
    let f = r_factors(a, b);
    let ds: Mat =
        f.s.iter()
            .zip(&f.d)
            .map(|(row, d)| row.iter().map(|x| x * d).collect())
            .collect();
    mat_mul(&f.p, &ds)
}

/// Dense inverse of the braiding `V_b ⊗ V_a -> V_a ⊗ V_b`, as a map
/// `V_a ⊗ V_b -> V_b ⊗ V_a`: `S^{-1} D^{-1} P^{-1}` with `S^{-1} = Σ (I - S)^k`.
pub fn dense_r_inverse(a: usize, b: usize) -> Mat {
    let f = r_factors(b, a);
    let dim = a * b;
    let nil: Mat = mat_add(&identity(dim), &mat_scale(&f.s, &QPoly::constant(-1)));
    let mut s_inv = identity(dim);
    let mut power = identity(dim);
    for _ in 0..dim {
        power = mat_mul(&power, &nil);
        if power.iter().all(|r| r.iter().all(QPoly::is_zero)) {
            break;
        }
        s_inv = mat_add(&s_inv, &power);
    }
    let d_inv: Mat = (0..dim)
        .map(|i| {
            let (c, h) = f.d[i]
                .as_monomial()
                .map(|(c, h)| (c.clone(), h))
                .expect("monomial");
            assert!(c.is_one());
            let mut row = vec![QPoly::zero(); dim];
            row[i] = QPoly::half_monomial(1, -h);
            row
        })
        .collect();
    // P^{-1} is the transpose of the flip.
    let p_inv: Mat = (0..dim)
        .map(|i| (0..dim).map(|j| f.p[j][i].clone()).collect())
        .collect();
    mat_mul(&s_inv, &mat_mul(&d_inv, &p_inv))
}

/// Unnormalized quantum trace `tr((K^{-1})^{⊗n} ρ(β))` by dense local updates.
pub fn dense_trace(braid: &BraidWord, strand_colours: &[u32]) -> QPoly {
    let n = braid.strands();
    let mut blocks: std::collections::HashMap<(usize, usize, bool), Mat> = Default::default();
    let start: Vec<usize> = strand_colours.iter().map(|&c| c as usize).collect();
    let dim: usize = start.iter().product();
    let mut total = QPoly::zero();
    for col in 0..dim {
        let mut cols = start.clone();
        let mut v = vec![QPoly::zero(); dim];
        v[col] = QPoly::one();
        for &g in braid.word() {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (cols[i], cols[i + 1]);
            let key = (a, b, g < 0);
            let r = blocks
                .entry(key)
                .or_insert_with(|| {
                    if g < 0 {
                        dense_r_inverse(a, b)
                    } else {
                        dense_r(a, b)
                    }
                })
                .clone();
            let mut next_cols = cols.clone();
            next_cols.swap(i, i + 1);
            let mut out = vec![QPoly::zero(); dim];
            for (idx, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let digits = decode(idx, &cols);
                let src = digits[i] * b + digits[i + 1];
                for (dst, row) in r.iter().enumerate() {
                    let coeff = &row[src];
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut d2 = digits.clone();
                    d2[i] = dst / a;
                    d2[i + 1] = dst % a;
                    out[encode(&d2, &next_cols)] += &(c * coeff);
                }
            }
            v = out;
            cols = next_cols;
        }
        assert_eq!(cols, start);
        let digits = decode(col, &start);
        let weight: i64 = (0..n).map(|k| -h_weight(start[k], digits[k])).sum();
        total += &(&v[col] * &QPoly::q_pow(weight));
    }
    total
}

fn decode(mut idx: usize, radix: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radix.len()];
    for k in (0..radix.len()).rev() {
        out[k] = idx % radix[k];
        idx /= radix[k];
    }
    out
}

fn encode(digits: &[usize], radix: &[usize]) -> usize {
    digits.iter().zip(radix).fold(0, |acc, (d, r)| acc * r + d)
}

/// Coloured Jones polynomial from the dense oracle.
pub fn dense_coloured_jones(
    link: &LinkPresentation,
    colours: &[u32],
    convention: FramingConvention,
) -> QPoly {
    let strand: Vec<u32> = link.colouring().iter().map(|&c| colours[c - 1]).collect();
    &framing_factor(link, colours, convention) * &dense_trace(link.braid(), &strand)
}

// ---------------------------------------------------------------------------
// Kauffman bracket oracle
// ---------------------------------------------------------------------------

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Unnormalized Kauffman bracket of the braid closure (`⟨O⟩ = d`), with
/// `A = q^{1/2}` and `d = -A^2 - A^{-2}`.
///
/// For `σ_i` the A-smoothing is the vertical one (it joins the regions above
/// and below the crossing); for `σ_i^{-1}` it is the horizontal one.
pub fn kauffman_bracket(braid: &BraidWord) -> QPoly {
    let n = braid.strands();
    let m = braid.len();
    let node = |t: usize, p: usize| (t % (m.max(1))) * n + p;
    let loop_value = -(&QPoly::q_pow(1) + &QPoly::q_pow(-1));
    let mut total = QPoly::zero();
    for state in 0u64..(1u64 << m) {
        let mut parent: Vec<usize> = (0..n * m.max(1)).collect();
        let mut a_minus_b = 0i64;
        for (t, &g) in braid.word().iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let a_smoothing = state >> t & 1 == 0;
            a_minus_b += if a_smoothing { 1 } else { -1 };
            let vertical = a_smoothing == (g > 0);
            for p in 0..n {
                if p != i && p != i + 1 {
                    union(&mut parent, node(t, p), node(t + 1, p));
                }
            }
            if vertical {
                union(&mut parent, node(t, i), node(t + 1, i));
                union(&mut parent, node(t, i + 1), node(t + 1, i + 1));
            } else {
                union(&mut parent, node(t, i), node(t, i + 1));
                union(&mut parent, node(t + 1, i), node(t + 1, i + 1));
            }
        }
        let loops = (0..parent.len())
            .filter(|&x| find(&mut parent, x) == x)
            .count();
        total += &(&QPoly::half_monomial(1, a_minus_b) * &loop_value.pow(loops as u32));
    }
    total
}

/// Colour-2 Jones polynomial from the bracket:
/// `(-1)^{l + #crossings} ⟨D⟩ · Π_i (q^{3/2})^{f_i - w_i}`.
pub fn kauffman_jones(link: &LinkPresentation) -> QPoly {
    let bracket = kauffman_bracket(link.braid());
    let sign = if (link.components() + link.braid().len()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let excess: i64 = link
        .framings()
        .iter()
        .zip(link.writhe())
        .map(|(f, w)| f - w)
        .sum();
    &bracket * &QPoly::half_monomial(BigInt::from(sign), 3 * excess)
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

pub fn random_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

pub fn random_braid(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    BraidWord::new(n, random_word(rng, n, max_len)).unwrap()
}

pub fn random_link(
    rng: &mut impl Rng,
    max_strands: usize,
    max_len: usize,
    framing: i64,
) -> LinkPresentation {
    let braid = random_braid(rng, max_strands, max_len);
    let l = quantinv::braid::closure_components(&braid).components;
    let framings = (0..l).map(|_| rng.gen_range(-framing..=framing)).collect();
    LinkPresentation::new(braid, framings).unwrap()
}

pub fn random_colours(rng: &mut impl Rng, components: usize, max: u32) -> Vec<u32> {
    (0..components).map(|_| rng.gen_range(1..=max)).collect()
}

pub fn link(strands: usize, word: &[i32], framings: &[i64]) -> LinkPresentation {
    LinkPresentation::new(
        BraidWord::new(strands, word.to_vec()).unwrap(),
        framings.to_vec(),
    )
    .unwrap()
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn is_unit(c: &BigInt) -> bool {
    c.is_one() || (-c).is_one()
}
