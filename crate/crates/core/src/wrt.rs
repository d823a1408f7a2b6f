//! Level-`N` Witten–Reshetikhin–Turaev invariants of surgery presentations.
//!
//! Two independent routes are provided:
//!
//! * [`tau_direct`] colours every component with the Kirby colour
//!   `Ω = Σ_{c=1}^{N-1} [c]_ξ V_c` and sums coloured Jones polynomials;
//! * [`tau_statesum`] regroups the same quantity as a sum over multi-indices
//!   `ī` of intersection terms `Λ_ī`, each assembled from the local-system
//!   prefactor, the Kirby-circle pairing and a diagonal entry of the braid
//!   representation, with the quantum integers recovered as
//!   `{1}^{-l} ψ(∏ (y_i - y_i^{-1}))`.
//!
//! Both are normalized by `D^b Δ₊^{b₊} Δ₋^{b₋}` where `b₊, b₋, b` is the
//! inertia of the linking matrix. `D = |Δ₊|` is in general not an element of
//! the cyclotomic field, so the power `D^b` is kept symbolic.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::braid::{BraidWord, Inertia, LinkPresentation};
use crate::cyclotomic::{eval_at_root, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::intersection::{kirby_circle_fixture, pairing_evaluate};
use crate::laurent::{specialize_composed, LaurentPoly, SpecializationSpec, VarContext};
use crate::qpoly::{quantum_integer, QPoly, QuantumMode};
use crate::quantum_rep::{
    coloured_jones, framing_factor, strand_colours, weight_indices, BraidRepOperator,
    FramingConvention, WeightIndex,
};

/// Smallest level for which the Kirby colour has a non-trivial colour.
pub const MIN_LEVEL: u32 = 3;

/// A surgery presentation together with the level and framing convention.
#[derive(Debug, Clone)]
pub struct SurgeryInput {
    pub presentation: LinkPresentation,
    pub level: u32,
    pub convention: FramingConvention,
}

impl SurgeryInput {
    pub fn new(
        presentation: LinkPresentation,
        level: u32,
        convention: FramingConvention,
    ) -> Result<Self> {
        check_level(level)?;
        Ok(Self {
            presentation,
            level,
            convention,
        })
    }
}

fn check_level(level: u32) -> Result<()> {
    if level < MIN_LEVEL {
        return Err(Error::LevelTooSmall {
            level,
            min: MIN_LEVEL,
        });
    }
    Ok(())
}

/// `Ω = [(\[c\]_ξ, c) for c in 1..N]`.
pub fn kirby_colour(level: u32) -> Result<Vec<(CyclotomicNumber, u32)>> {
    check_level(level)?;
    (1..level)
        .map(|c| {
            let qi = quantum_integer(c as i64, QuantumMode::Bracket)?;
            Ok((eval_at_root(&qi, level)?, c))
        })
        .collect()
}

/// All colour tuples in `{1..N-1}^l`, lexicographically.
pub fn colour_tuples(components: usize, level: u32) -> Vec<Vec<u32>> {
    weight_indices(&vec![level - 1; components])
        .into_iter()
        .map(|t| t.into_iter().map(|c| c + 1).collect())
        .collect()
}

/// The normalizers `Δ±` and `D² = Δ₊Δ₋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalizers {
    pub level: u32,
    pub convention: FramingConvention,
    pub delta_plus: CyclotomicNumber,
    pub delta_minus: CyclotomicNumber,
    pub d_squared: CyclotomicNumber,
}

impl Normalizers {
    /// `D = |Δ₊|` as a positive real.
    pub fn d_real(&self) -> f64 {
        self.d_squared.to_complex().re.sqrt()
    }
}

/// Kirby-coloured `±1`-framed unknots.
pub fn deltas(level: u32, convention: FramingConvention) -> Result<Normalizers> {
    check_level(level)?;
    let unknot = |f: i64| -> Result<CyclotomicNumber> {
        let u = LinkPresentation::new(BraidWord::identity(1)?, vec![f])?;
        kirby_sum(&u, level, convention)
    };
    let delta_plus = unknot(1)?;
    let delta_minus = unknot(-1)?;
    if delta_plus.is_zero() {
        return Err(Error::ZeroNormalizer("Δ+"));
    }
    if delta_minus.is_zero() {
        return Err(Error::ZeroNormalizer("Δ-"));
    }
    if delta_minus != delta_plus.conj() {
        return Err(Error::Internal("Δ- is not the conjugate of Δ+".into()));
    }
    let d_squared = &delta_plus * &delta_minus;
    Ok(Normalizers {
        level,
        convention,
        delta_plus,
        delta_minus,
        d_squared,
    })
}

/// `Σ_{N̄} ∏[N_i]_ξ J_{N̄}(L, ξ)`, unnormalized.
fn kirby_sum(
    link: &LinkPresentation,
    level: u32,
    convention: FramingConvention,
) -> Result<CyclotomicNumber> {
    let omega = kirby_colour(level)?;
    let terms = colour_tuples(link.components(), level)
        .into_par_iter()
        .map(|colours| {
            let j = coloured_jones(link, &colours, convention)?;
            let mut t = eval_at_root(&j.value, level)?;
            for &c in &colours {
                t = &t * &omega[c as usize - 1].0;
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut acc = CyclotomicNumber::zero(level)?;
    for t in &terms {
        acc = &acc + t;
    }
    Ok(acc)
}

/// `τ = numerator / D^b`, with the normalization data that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct WrtValue {
    pub level: u32,
    pub convention: FramingConvention,
    /// Kirby sum divided by `Δ₊^{b₊} Δ₋^{b₋}`.
    pub numerator: CyclotomicNumber,
    pub b: usize,
    pub b_plus: usize,
    pub b_minus: usize,
    pub delta_plus: CyclotomicNumber,
    pub delta_minus: CyclotomicNumber,
    /// `numerator / D^b` under `ξ = e^{πi/N}`.
    pub complex: Complex64,
}

impl WrtValue {
    /// Exact equality of `τ`: same numerator and same symbolic power of `D`.
    pub fn same_invariant(&self, other: &WrtValue) -> bool {
        self.b == other.b && self.numerator == other.numerator
    }

    pub fn is_one(&self) -> bool {
        self.b == 0 && self.numerator.is_one()
    }
}

fn normalize(raw: CyclotomicNumber, inertia: Inertia, norms: &Normalizers) -> Result<WrtValue> {
    let denom = &norms.delta_plus.pow(inertia.positive as i64)?
        * &norms.delta_minus.pow(inertia.negative as i64)?;
    let numerator = raw.div(&denom)?;
    let complex = numerator.to_complex() / norms.d_real().powi(inertia.zero as i32);
    Ok(WrtValue {
        level: norms.level,
        convention: norms.convention,
        numerator,
        b: inertia.zero,
        b_plus: inertia.positive,
        b_minus: inertia.negative,
        delta_plus: norms.delta_plus.clone(),
        delta_minus: norms.delta_minus.clone(),
        complex,
    })
}

/// `τ` from the Kirby-colour formula.
pub fn tau_direct(input: &SurgeryInput) -> Result<WrtValue> {
    let norms = deltas(input.level, input.convention)?;
    let raw = kirby_sum(&input.presentation, input.level, input.convention)?;
    normalize(raw, input.presentation.inertia(), &norms)
}

/// One intersection term `Λ_ī` for a colour tuple `N̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaTerm {
    pub index: WeightIndex,
    pub colours: Vec<u32>,
    /// `∏_k x_k^{-1} · d^{-Σ i_k} · ∏_i (y_i - y_i^{-1})` in the strand variables.
    pub prefactor: LaurentPoly,
    /// `∏_i x_{p_i}^{f_i - Σ_j lk_ij}` for the paper-literal convention.
    pub framing_monomial: Option<LaurentPoly>,
    /// Specialized framing contribution.
    pub framing: QPoly,
    /// `ρ(β)_{ī,ī}` on `V_{C_1} ⊗ ... ⊗ V_{C_n}`.
    pub diagonal: QPoly,
    /// `Λ_ī|_ψ`.
    pub value: QPoly,
}

/// Per-colour-tuple data shared by all indices admissible for it.
struct ColourState {
    colours: Vec<u32>,
    spec: SpecializationSpec,
    op: BraidRepOperator,
    framing: QPoly,
    framing_monomial: Option<LaurentPoly>,
}

/// Multi-index-independent part of the prefactor: the Kirby-circle pairing
/// in the strand-variable ring.
struct StateSumRing {
    ctx: VarContext,
    kirby: LaurentPoly,
}

impl StateSumRing {
    fn new(link: &LinkPresentation) -> Result<Self> {
        let ctx = VarContext::new(link.braid().strands(), link.components());
        let kirby = pairing_evaluate(&kirby_circle_fixture(link.components())?)?.embed(ctx)?;
        Ok(Self { ctx, kirby })
    }
}

impl ColourState {
    fn new(input: &SurgeryInput, colours: &[u32]) -> Result<Self> {
        let link = &input.presentation;
        let strand = strand_colours(link, colours)?;
        let spec = SpecializationSpec::new(
            colours.to_vec(),
            link.colouring().to_vec(),
            link.representatives().to_vec(),
        )?;
        let op = BraidRepOperator::new(link.braid(), &strand)?;
        let (framing, framing_monomial) = match input.convention {
            FramingConvention::PaperLiteral => {
                let ctx = VarContext::new(link.braid().strands(), link.components());
                let mut m = LaurentPoly::one(ctx);
                for (rep, g) in link
                    .representatives()
                    .iter()
                    .zip(link.framing_corrections())
                {
                    m = m * LaurentPoly::x(ctx, *rep, g)?;
                }
                (specialize_composed(&m, &spec)?, Some(m))
            }
            FramingConvention::Ribbon => (framing_factor(link, colours, input.convention), None),
        };
        Ok(Self {
            colours: colours.to_vec(),
            spec,
            op,
            framing,
            framing_monomial,
        })
    }

    fn admits(&self, index: &[u32]) -> bool {
        self.spec
            .strand_colours()
            .iter()
            .zip(index)
            .all(|(c, i)| i < c)
    }

    fn lambda(&self, ring: &StateSumRing, index: &[u32]) -> Result<LambdaTerm> {
        let strand = self.spec.strand_colours();
        if index.len() != strand.len() || !self.admits(index) {
            return Err(Error::Inadmissible {
                index: index.to_vec(),
                colours: self.colours.clone(),
            });
        }
        let ctx = ring.ctx;
        let mut prefactor = LaurentPoly::d(ctx, -(index.iter().map(|&i| i as i64).sum::<i64>()));
        for k in 1..=index.len() {
            prefactor = prefactor * LaurentPoly::x(ctx, k, -1)?;
        }
        prefactor = prefactor * ring.kirby.clone();
        let diagonal = self.op.diagonal_entry(index)?;
        let value = &(&self.framing * &specialize_composed(&prefactor, &self.spec)?) * &diagonal;
        Ok(LambdaTerm {
            index: index.to_vec(),
            colours: self.colours.clone(),
            prefactor,
            framing_monomial: self.framing_monomial.clone(),
            framing: self.framing.clone(),
            diagonal,
            value,
        })
    }
}

fn check_index_level(index: &[u32], level: u32, colours: &[u32]) -> Result<()> {
    if index.iter().any(|&i| i + 2 > level) {
        return Err(Error::Inadmissible {
            index: index.to_vec(),
            colours: colours.to_vec(),
        });
    }
    Ok(())
}

/// `Λ_ī(β)` for the colour tuple `N̄`; rejects `ī` outside `C(N̄)`.
pub fn lambda_wrt(input: &SurgeryInput, index: &[u32], colours: &[u32]) -> Result<LambdaTerm> {
    check_index_level(index, input.level, colours)?;
    if colours.iter().any(|&c| c == 0 || c >= input.level) {
        return Err(Error::ColourMismatch(format!(
            "colours {colours:?} outside 1..{}",
            input.level - 1
        )));
    }
    let ring = StateSumRing::new(&input.presentation)?;
    ColourState::new(input, colours)?.lambda(&ring, index)
}

/// All colour states of an input, in lexicographic colour order.
fn colour_states(input: &SurgeryInput) -> Result<Vec<ColourState>> {
    colour_tuples(input.presentation.components(), input.level)
        .into_par_iter()
        .map(|c| ColourState::new(input, &c))
        .collect()
}

/// `{1}_ξ^{-l}`.
fn brace_one_inverse_power(level: u32, l: usize) -> Result<CyclotomicNumber> {
    let brace = eval_at_root(&quantum_integer(1, QuantumMode::Brace)?, level)?;
    brace.pow(-(l as i64))
}

/// `τ` from the regrouped state sum over multi-indices.
pub fn tau_statesum(input: &SurgeryInput) -> Result<WrtValue> {
    let norms = deltas(input.level, input.convention)?;
    let link = &input.presentation;
    let ring = StateSumRing::new(link)?;
    let states = colour_states(input)?;
    let indices = weight_indices(&vec![input.level - 1; link.braid().strands()]);
    let partial = indices
        .into_par_iter()
        .map(|index| {
            let mut acc = QPoly::zero();
            for state in states.iter().filter(|s| s.admits(&index)) {
                acc += &state.lambda(&ring, &index)?.value;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    let total: QPoly = partial.into_iter().sum();
    let raw = &eval_at_root(&total, input.level)?
        * &brace_one_inverse_power(input.level, link.components())?;
    normalize(raw, link.inertia(), &norms)
}

/// Result of comparing the two orders of summation term by term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeAudit {
    /// Number of `(N̄, ī)` pairs in the colour-major table.
    pub colour_major_terms: usize,
    /// Number of `(ī, N̄)` pairs in the index-major table.
    pub index_major_terms: usize,
    /// Pairs whose specialized values differ, or that occur in one table only.
    pub mismatches: Vec<(Vec<u32>, WeightIndex)>,
}

impl ExchangeAudit {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.colour_major_terms == self.index_major_terms
    }
}

/// Checks `Σ_{N̄} Σ_{ī ∈ C(N̄)} = Σ_{ī} Σ_{N̄ ∋ ī}` term by term.
///
/// The colour-major table holds `∏[N_i]_ξ · framing · μ(ī) · ρ_{ī,ī}` from
/// the coloured Jones summands; the index-major table holds `{1}^{-l} Λ_ī|_ψ`.
pub fn exchange_audit(input: &SurgeryInput) -> Result<ExchangeAudit> {
    let level = input.level;
    let link = &input.presentation;
    let omega = kirby_colour(level)?;
    let mut colour_major: BTreeMap<(Vec<u32>, WeightIndex), CyclotomicNumber> = BTreeMap::new();
    let mut colour_major_terms = 0;
    for colours in colour_tuples(link.components(), level) {
        let j = coloured_jones(link, &colours, input.convention)?;
        let mut coeff = CyclotomicNumber::one(level)?;
        for &c in &colours {
            coeff = &coeff * &omega[c as usize - 1].0;
        }
        for s in j.summands {
            let v = &coeff * &eval_at_root(&(&j.framing_factor * &s.contribution), level)?;
            colour_major.insert((colours.clone(), s.index), v);
            colour_major_terms += 1;
        }
    }
    let ring = StateSumRing::new(link)?;
    let states = colour_states(input)?;
    let scale = brace_one_inverse_power(level, link.components())?;
    let mut mismatches = Vec::new();
    let mut index_major_terms = 0;
    for index in weight_indices(&vec![level - 1; link.braid().strands()]) {
        for state in states.iter().filter(|s| s.admits(&index)) {
            index_major_terms += 1;
            let v = &scale * &eval_at_root(&state.lambda(&ring, &index)?.value, level)?;
            match colour_major.remove(&(state.colours.clone(), index.clone())) {
                Some(w) if w == v => {}
                _ => mismatches.push((state.colours.clone(), index.clone())),
            }
        }
    }
    mismatches.extend(colour_major.into_keys());
    Ok(ExchangeAudit {
        colour_major_terms,
        index_major_terms,
        mismatches,
    })
}

/// Comparison of `τ(L)` with `τ(L ⊔ U_f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizationReport {
    pub convention: FramingConvention,
    pub level: u32,
    pub framing: i64,
    pub base: WrtValue,
    pub stabilized: WrtValue,
    pub equal: bool,
    /// `stabilized / base` when the powers of `D` agree and `base ≠ 0`.
    pub discrepancy: Option<CyclotomicNumber>,
}

/// Adds a distant unknot with framing `framing` (normally `±1`) and compares.
pub fn stabilization_check(input: &SurgeryInput, framing: i64) -> Result<StabilizationReport> {
    let base = tau_direct(input)?;
    let stab_input = SurgeryInput {
        presentation: input.presentation.with_distant_unknot(framing),
        ..input.clone()
    };
    let stabilized = tau_direct(&stab_input)?;
    let equal = base.same_invariant(&stabilized);
    let discrepancy = if equal || base.b != stabilized.b || base.numerator.is_zero() {
        None
    } else {
        Some(stabilized.numerator.div(&base.numerator)?)
    };
    Ok(StabilizationReport {
        convention: input.convention,
        level: input.level,
        framing,
        base,
        stabilized,
        equal,
        discrepancy,
    })
}

/// One Kirby-move probe: two presentations of the same manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeCheck {
    pub name: String,
    pub lhs: WrtValue,
    pub rhs: WrtValue,
    pub equal: bool,
}

/// All probes for one convention at one level.
#[derive(Debug, Clone, PartialEq)]
pub struct ConventionReport {
    pub convention: FramingConvention,
    pub level: u32,
    pub checks: Vec<ProbeCheck>,
    /// Set when the normalizers vanish, in which case no probe ran.
    pub failure: Option<String>,
}

impl ConventionReport {
    pub fn passes(&self) -> bool {
        self.failure.is_none() && self.checks.iter().all(|c| c.equal)
    }
}

fn link(strands: usize, word: &[i32], framings: &[i64]) -> Result<LinkPresentation> {
    LinkPresentation::new(BraidWord::new(strands, word.to_vec())?, framings.to_vec())
}

/// Pairs of presentations related by Kirby moves:
/// distant stabilization, blowing down a `±1`-framed meridian of an unknot
/// (Hopf link with framings `(f, ±1)` against `U_{f∓1}`), and Markov
/// stabilization of the braid.
pub fn kirby_probe_pairs() -> Result<Vec<(String, LinkPresentation, LinkPresentation)>> {
    let mut out = vec![
        (
            "U(+1) ⊔ U(+1) ~ U(+1)".to_string(),
            link(2, &[], &[1, 1])?,
            link(1, &[], &[1])?,
        ),
        (
            "trefoil(-1) ⊔ U(+1) ~ trefoil(-1)".to_string(),
            link(3, &[1, 1, 1], &[-1, 1])?,
            link(2, &[1, 1, 1], &[-1])?,
        ),
        (
            "Hopf(0,0) ~ U(+1)".to_string(),
            link(2, &[1, 1], &[0, 0])?,
            link(1, &[], &[1])?,
        ),
    ];
    for f in -1..=2 {
        for s in [1i64, -1] {
            out.push((
                format!("Hopf({f},{s:+}) ~ U({})", f - s),
                link(2, &[1, 1], &[f, s])?,
                link(1, &[], &[f - s])?,
            ));
        }
    }
    out.push((
        "trefoil(0) on 3 strands ~ trefoil(0)".to_string(),
        link(3, &[1, 1, 1, 2], &[0])?,
        link(2, &[1, 1, 1], &[0])?,
    ));
    Ok(out)
}

/// Runs every Kirby probe under one convention.
pub fn kirby_probes(level: u32, convention: FramingConvention) -> Result<ConventionReport> {
    check_level(level)?;
    if let Err(e) = deltas(level, convention) {
        return match e {
            Error::ZeroNormalizer(_) => Ok(ConventionReport {
                convention,
                level,
                checks: vec![],
                failure: Some(e.to_string()),
            }),
            other => Err(other),
        };
    }
    let checks = kirby_probe_pairs()?
        .into_par_iter()
        .map(|(name, a, b)| {
            let lhs = tau_direct(&SurgeryInput::new(a, level, convention)?)?;
            let rhs = tau_direct(&SurgeryInput::new(b, level, convention)?)?;
            let equal = lhs.same_invariant(&rhs);
            Ok(ProbeCheck {
                name,
                lhs,
                rhs,
                equal,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConventionReport {
        convention,
        level,
        checks,
        failure: None,
    })
}

/// The first convention (in [`FramingConvention::ALL`] order) passing every
/// probe at all of the given levels.
pub fn identify_convention(levels: &[u32]) -> Result<Option<FramingConvention>> {
    for conv in FramingConvention::ALL {
        let mut ok = true;
        for &level in levels {
            if !kirby_probes(level, conv)?.passes() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(conv));
        }
    }
    Ok(None)
}
