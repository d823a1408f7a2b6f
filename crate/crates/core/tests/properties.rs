//! Randomized algebraic and topological properties.

mod common;

use proptest::prelude::*;

use common::{kauffman_jones, link};
use quantinv::braid::{closure_components, linking_numbers, BraidWord, LinkPresentation};
use quantinv::cyclotomic::eval_at_root;
use quantinv::float_check::{close, float_tau, FloatQ};
use quantinv::intersection::{
    pairing_evaluate, phi_evaluate, GeneratorKind, Letter, LoopWord, PairingData, PairingParams,
    PairingPoint,
};
use quantinv::laurent::{LaurentPoly, SpecializationSpec, VarContext};
use quantinv::qpoly::QPoly;
use quantinv::quantum_rep::{coloured_jones, BraidRepOperator, FramingConvention};
use quantinv::wrt::{tau_direct, tau_statesum, SurgeryInput};

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn qpoly(max_half: i64, max_terms: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-max_half..=max_half, -20i64..=20), 0..=max_terms).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(h, c)| QPoly::half_monomial(c, h))
            .sum()
    })
}

/// An integer-exponent polynomial of degree at most `deg` in `q^{±1}`.
fn integral_qpoly(deg: i64) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-deg..=deg, -20i64..=20), 0..=12)
        .prop_map(|terms| terms.into_iter().map(|(e, c)| QPoly::monomial(c, e)).sum())
}

fn laurent(ctx: VarContext) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (prop::collection::vec(-3i64..=3, ctx.arity()), -5i64..=5),
        0..=6,
    )
    .prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(ctx), |acc, (e, c)| {
                acc + LaurentPoly::term(ctx, c, e).unwrap()
            })
    })
}

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..strands as i32, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(g, s)| if s { g } else { -g }).collect())
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands)
        .prop_flat_map(move |n| word(n, max_len).prop_map(move |w| BraidWord::new(n, w).unwrap()))
}

fn framed(max_strands: usize, max_len: usize) -> impl Strategy<Value = LinkPresentation> {
    braid(max_strands, max_len).prop_flat_map(|b| {
        let l = closure_components(&b).components;
        prop::collection::vec(-2i64..=2, l)
            .prop_map(move |f| LinkPresentation::new(b.clone(), f).unwrap())
    })
}

fn params() -> impl Strategy<Value = PairingParams> {
    (0usize..=4, 1usize..=3)
        .prop_flat_map(|(n, l)| (Just(n), 0..=n, Just(l)))
        .prop_map(|(n, k, l)| PairingParams::new(n, k, l).unwrap())
}

fn letter(p: PairingParams) -> impl Strategy<Value = Letter> {
    let e = -3i64..=3;
    let mut kinds: Vec<BoxedStrategy<Letter>> = vec![
        (1..=p.l, e.clone())
            .prop_map(|(j, e)| Letter::gamma(j, e))
            .boxed(),
        (1..=p.l, e.clone())
            .prop_map(|(j, e)| Letter::gamma_bar(j, e))
            .boxed(),
        (1..=p.l, e.clone())
            .prop_map(|(j, e)| Letter::eta(j, e))
            .boxed(),
        e.clone().prop_map(Letter::delta).boxed(),
    ];
    if p.n > 0 {
        kinds.push((1..=p.n, e).prop_map(|(i, e)| Letter::sigma(i, e)).boxed());
    }
    prop::strategy::Union::new(kinds)
}

fn loop_word(p: PairingParams) -> impl Strategy<Value = LoopWord> {
    prop::collection::vec(letter(p), 0..=6).prop_map(LoopWord::new)
}

fn points(p: PairingParams) -> impl Strategy<Value = Vec<PairingPoint>> {
    prop::collection::vec(
        (prop_oneof![Just(1i8), Just(-1i8)], loop_word(p))
            .prop_map(|(sign, word)| PairingPoint { sign, word }),
        0..=5,
    )
}

fn pairing_pair() -> impl Strategy<Value = (PairingData, PairingData)> {
    params().prop_flat_map(|p| {
        (points(p), points(p)).prop_map(move |(a, b)| {
            (
                PairingData::new(p, a).unwrap(),
                PairingData::new(p, b).unwrap(),
            )
        })
    })
}

fn spec_for(ctx_l: usize, n: usize) -> impl Strategy<Value = SpecializationSpec> {
    // Strand k lies on component colouring[k]; every component gets a strand.
    (
        prop::collection::vec(1u32..=5, ctx_l),
        prop::collection::vec(1..=ctx_l, n),
        prop::collection::vec(1..=n.max(1), ctx_l),
    )
        .prop_map(move |(colours, colouring, reps)| {
            let reps = if n == 0 { vec![] } else { reps };
            SpecializationSpec::new(colours, colouring, reps).unwrap()
        })
}

// ---------------------------------------------------------------------------
// Polynomial rings
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn qpoly_ring_laws(a in qpoly(20, 8), b in qpoly(20, 8), c in qpoly(20, 8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(VarContext::new(2, 2)), b in laurent(VarContext::new(2, 2)),
                         c in laurent(VarContext::new(2, 2))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn specializations_are_ring_homomorphisms(
        (a, b, spec) in (1usize..=3, 1usize..=4).prop_flat_map(|(l, n)| {
            let ctx = VarContext::new(n, l);
            (laurent(ctx), laurent(ctx), spec_for(l, n))
        })
    ) {
        let fc = |p: &LaurentPoly| p.apply_fc(&spec).unwrap();
        prop_assert_eq!(fc(&(&a * &b)), &fc(&a) * &fc(&b));
        prop_assert_eq!(fc(&(&a + &b)), &fc(&a) + &fc(&b));
        let psi = |p: &LaurentPoly| p.specialize_psi(&spec).unwrap();
        let (fa, fb) = (fc(&a), fc(&b));
        prop_assert_eq!(psi(&(&fa * &fb)), &psi(&fa) * &psi(&fb));
        prop_assert_eq!(psi(&(&fa + &fb)), &psi(&fa) + &psi(&fb));
        prop_assert!(psi(&LaurentPoly::one(fa.context())).is_one());
    }

    #[test]
    fn exact_and_float_evaluation_agree(p in integral_qpoly(50), h in qpoly(100, 10), level in 3u32..=12) {
        for poly in [&p, &h] {
            let exact = eval_at_root(poly, level).unwrap().to_complex();
            let float = poly.eval_half(FloatQ::at_level(level).half);
            prop_assert!((exact - float).norm() < 1e-9 * (1.0 + float.norm()), "{} at N={}", poly, level);
        }
    }

    #[test]
    fn root_evaluation_is_a_homomorphism(a in qpoly(30, 6), b in qpoly(30, 6), level in 3u32..=8) {
        let ev = |p: &QPoly| eval_at_root(p, level).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }
}

// ---------------------------------------------------------------------------
// Local system and pairing evaluation (≥ 1000 random data sets each)
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn pairing_local_system_laws((a, b) in pairing_pair()) {
        let p = a.params;
        // Additivity over point lists and the sign flip.
        let ea = pairing_evaluate(&a).unwrap();
        let eb = pairing_evaluate(&b).unwrap();
        prop_assert_eq!(pairing_evaluate(&a.concat(&b).unwrap()).unwrap(), &ea + &eb);
        prop_assert_eq!(pairing_evaluate(&a.negated()).unwrap(), -&ea);
        // Multiplicativity over loop concatenation, and Φ is a signed monomial.
        for (x, y) in a.points.iter().zip(&b.points) {
            let phi_x = phi_evaluate(&x.word, &p).unwrap();
            let phi_y = phi_evaluate(&y.word, &p).unwrap();
            prop_assert_eq!(phi_evaluate(&x.word.then(&y.word), &p).unwrap(), &phi_x * &phi_y);
            prop_assert!(quantinv::laurent::is_signed_monomial(&phi_x));
        }
        // Φ depends on the loop only through its abelianization.
        for x in &a.points {
            let mut rev = x.word.letters().to_vec();
            rev.reverse();
            prop_assert_eq!(
                phi_evaluate(&LoopWord::new(rev), &p).unwrap(),
                phi_evaluate(&x.word, &p).unwrap()
            );
        }
        // JSON round trip.
        prop_assert_eq!(&PairingData::from_json(&a.to_json()).unwrap(), &a);
    }

    #[test]
    fn pairing_orientation_rule(p in params(), e in -3i64..=3) {
        let ctx = p.context();
        for i in 1..=p.n {
            let got = phi_evaluate(&LoopWord::new(vec![Letter::sigma(i, e)]), &p).unwrap();
            let sign = if i > p.n - p.k { -1 } else { 1 };
            prop_assert_eq!(got, LaurentPoly::x(ctx, i, 2 * sign * e).unwrap());
        }
        for j in 1..=p.l {
            let one = |k: GeneratorKind| phi_evaluate(&LoopWord::new(vec![Letter(k, Some(j), e)]), &p).unwrap();
            prop_assert_eq!(one(GeneratorKind::Gamma), LaurentPoly::y(ctx, j, 2 * e).unwrap());
            prop_assert_eq!(one(GeneratorKind::GammaBar), LaurentPoly::y(ctx, j, -2 * e).unwrap());
            prop_assert_eq!(one(GeneratorKind::Eta), LaurentPoly::y(ctx, j, e).unwrap());
        }
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let delta = phi_evaluate(&LoopWord::new(vec![Letter::delta(e)]), &p).unwrap();
        prop_assert_eq!(delta, &LaurentPoly::d(ctx, e) * &LaurentPoly::constant(ctx, sign));
    }
}

// ---------------------------------------------------------------------------
// Braid topology
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn linking_matrix_is_symmetric(b in braid(6, 20)) {
        let closure = closure_components(&b);
        let data = linking_numbers(&b, &closure).unwrap();
        let l = closure.components;
        for i in 0..l {
            prop_assert_eq!(data.linking[i][i], 0);
            for j in 0..l {
                prop_assert_eq!(data.linking[i][j], data.linking[j][i]);
            }
        }
        // The mirror negates every linking number and writhe.
        let m = linking_numbers(&b.mirror(), &closure_components(&b.mirror())).unwrap();
        for i in 0..l {
            prop_assert_eq!(m.writhe[i], -data.writhe[i]);
            for j in 0..l {
                prop_assert_eq!(m.linking[i][j], -data.linking[i][j]);
            }
        }
    }

    #[test]
    fn markov_stabilization_preserves_derived_data(b in braid(5, 15), positive in any::<bool>()) {
        let n = b.strands();
        let g = if positive { n as i32 } else { -(n as i32) };
        let mut w = b.word().to_vec();
        w.push(g);
        let stab = BraidWord::new(n + 1, w).unwrap();
        let (c0, c1) = (closure_components(&b), closure_components(&stab));
        prop_assert_eq!(c0.components, c1.components);
        let (d0, d1) = (linking_numbers(&b, &c0).unwrap(), linking_numbers(&stab, &c1).unwrap());
        prop_assert_eq!(&d0.linking, &d1.linking);
        // The new kink adds ±1 to the writhe of the last strand's component.
        let comp = c0.colouring[n - 1] - 1;
        for i in 0..c0.components {
            let expected = d0.writhe[i] + if i == comp { g.signum() as i64 } else { 0 };
            prop_assert_eq!(d1.writhe[i], expected);
        }
    }

    #[test]
    fn inertia_of_linking_matrix_is_consistent(link in framed(4, 10)) {
        let inertia = link.inertia();
        prop_assert_eq!(inertia.positive + inertia.negative + inertia.zero, link.components());
    }
}

// ---------------------------------------------------------------------------
// Quantum invariants
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn far_commutation(c in prop::collection::vec(1u32..=3, 2), s in any::<bool>(), t in any::<bool>()) {
        let (a, b) = (if s { 1 } else { -1 }, if t { 3 } else { -3 });
        let cols = [c[0], c[0], c[1], c[1]];
        let x = BraidRepOperator::new(&BraidWord::new(4, vec![a, b]).unwrap(), &cols).unwrap();
        let y = BraidRepOperator::new(&BraidWord::new(4, vec![b, a]).unwrap(), &cols).unwrap();
        for idx in quantinv::quantum_rep::weight_indices(&cols) {
            prop_assert_eq!(x.apply_basis(&idx).unwrap(), y.apply_basis(&idx).unwrap());
        }
    }

    #[test]
    fn colour_two_matches_kauffman_bracket(link in framed(4, 8)) {
        let colours = vec![2; link.components()];
        let j = coloured_jones(&link, &colours, FramingConvention::Ribbon).unwrap().value;
        prop_assert_eq!(j, kauffman_jones(&link));
    }

    #[test]
    fn markov_stabilization_of_jones(link in framed(3, 8), c in 1u32..=3, positive in any::<bool>()) {
        // Adding a kink σ_n^{±1} keeps the framed link when the framing of its
        // component is unchanged.
        let b = link.braid();
        let n = b.strands();
        let g = if positive { n as i32 } else { -(n as i32) };
        let mut w = b.word().to_vec();
        w.push(g);
        let stab = LinkPresentation::new(BraidWord::new(n + 1, w).unwrap(), link.framings().to_vec()).unwrap();
        let colours = vec![c; link.components()];
        let a = coloured_jones(&link, &colours, FramingConvention::Ribbon).unwrap().value;
        let s = coloured_jones(&stab, &colours, FramingConvention::Ribbon).unwrap().value;
        prop_assert_eq!(a, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tau_invariant_under_cyclic_rotation(link in framed(3, 6), level in 3u32..=4, k in 0usize..6) {
        // Rotating the word conjugates the braid but may relabel components;
        // a uniform framing makes the framed link independent of the labels.
        let framings = vec![link.framings()[0]; link.components()];
        let base = LinkPresentation::new(link.braid().clone(), framings.clone()).unwrap();
        let w = base.braid().word();
        let k = if w.is_empty() { 0 } else { k % w.len() };
        let rotated: Vec<i32> = w[k..].iter().chain(&w[..k]).copied().collect();
        let rot = LinkPresentation::new(BraidWord::new(base.braid().strands(), rotated).unwrap(), framings).unwrap();
        let conv = FramingConvention::Ribbon;
        let t0 = tau_direct(&SurgeryInput::new(base.clone(), level, conv).unwrap()).unwrap();
        let t1 = tau_statesum(&SurgeryInput::new(rot, level, conv).unwrap()).unwrap();
        prop_assert!(t0.same_invariant(&t1));
        let f = float_tau(&base, level, conv).unwrap();
        prop_assert!(close(f, t0.complex, 1e-6), "{} vs {}", f, t0.complex);
    }
}

#[test]
fn hopf_link_coloured_values() {
    // J_{a,b}(Hopf, framing 0) = [ab] for the positive Hopf link.
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            let j = coloured_jones(
                &link(2, &[1, 1], &[0, 0]),
                &[a, b],
                FramingConvention::Ribbon,
            )
            .unwrap()
            .value;
            let n = (a * b) as i64;
            let expected: QPoly = (0..n).map(|k| QPoly::q_pow(n - 1 - 2 * k)).sum();
            assert_eq!(j, expected, "{a} {b}");
        }
    }
}
