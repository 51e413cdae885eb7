mod common;

use causinf::beta_spectrum::{alt_convertible, beta_vector};
use causinf::bit2bit::{
    bit_convertible_fast, canonical_form, monotone_triple, parametrize, table1_vertices, BitParams,
};
use causinf::channel_game::{
    ace, ace_dist, guessing_probability, max_postselected_connection, Prior,
};
use causinf::function::BitFunction::{self, Flip, Identity, Reset0, Reset1};
use causinf::hull::in_hull;
use causinf::rtknowcaus::{
    apply_extremal, apply_mixture, enumerate_extremal_combs, know_convertible, CombSignature,
    Converter, ExtremalComb, DEFAULT_COMB_BUDGET,
};
use causinf::{
    compose_distributions, Channel, Distribution, FiniteFunction, FunctionDistribution, Rational,
    Rational64, Scalar, StochasticMap,
};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn arb_bits() -> impl Strategy<Value = Distribution> {
    (1i64..=32, prop::array::uniform3(0i64..=32)).prop_map(|(den, raw)| {
        let mut cuts: Vec<i64> = raw.iter().map(|c| c % (den + 1)).collect();
        cuts.sort_unstable();
        let parts = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], den - cuts[2]];
        Distribution::from_bits(BitFunction::ALL.into_iter().zip(parts.map(|p| r(p, den)))).unwrap()
    })
}

fn arb_distribution(domain: usize, codomain: usize) -> impl Strategy<Value = Distribution> {
    let f = prop::collection::vec(0..codomain, domain);
    prop::collection::vec((f, 1i64..=6), 1..=4).prop_map(move |entries| {
        let total: i64 = entries.iter().map(|(_, w)| w).sum();
        Distribution::new(
            domain,
            codomain,
            entries
                .into_iter()
                .map(|(t, w)| (FiniteFunction::new(codomain, t).unwrap(), r(w, total))),
        )
        .unwrap()
    })
}

fn arb_channel(input: usize, output: usize) -> impl Strategy<Value = Channel> {
    prop::collection::vec(prop::collection::vec(0i64..=5, output), input).prop_map(move |cols| {
        let columns = cols
            .into_iter()
            .map(|mut c| {
                if c.iter().all(|&v| v == 0) {
                    c[0] = 1;
                }
                let total: i64 = c.iter().sum();
                c.into_iter().map(|v| r(v, total)).collect()
            })
            .collect();
        Channel::from_columns(columns).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(
        a in arb_distribution(2, 3),
        b in arb_distribution(3, 2),
        c in arb_distribution(2, 3),
    ) {
        let left = compose_distributions(&compose_distributions(&a, &b).unwrap(), &c).unwrap();
        let right = compose_distributions(&a, &compose_distributions(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gamma_respects_composition(a in arb_distribution(3, 2), b in arb_distribution(2, 3)) {
        let composed = compose_distributions(&a, &b).unwrap().to_stochastic();
        prop_assert_eq!(composed, a.to_stochastic().after(&b.to_stochastic()).unwrap());
    }

    #[test]
    fn canonical_preimage_is_a_section(s in arb_channel(3, 2)) {
        let p = s.canonical_preimage();
        prop_assert_eq!(p.to_stochastic(), s.clone());
        let total = p.support().fold(r(0, 1), |acc, (_, w)| acc + w.clone());
        prop_assert_eq!(total, r(1, 1));
    }

    #[test]
    fn params_round_trip(p in arb_bits()) {
        let params = parametrize(&p).unwrap();
        prop_assert_eq!(params.to_distribution(), p.clone());
        let (a, b, g) = oracle_params(&p);
        prop_assert_eq!(params, BitParams::new(a, b, g).unwrap());
    }

    #[test]
    fn gamma_compatible_ace(p in arb_bits()) {
        prop_assert_eq!(ace_dist(&p).unwrap(), ace(&p.to_stochastic()).unwrap());
    }

    #[test]
    fn beta_bounds_ace(p in arb_bits()) {
        let t = monotone_triple(&p).unwrap();
        let effect = abs(ace(&p.to_stochastic()).unwrap());
        prop_assert!(t.m_beta >= effect);
        let on_bottom = p.bit_weight(Identity).min(p.bit_weight(Flip)) == r(0, 1);
        prop_assert_eq!(t.m_beta == effect, on_bottom);
    }

    #[test]
    fn spectrum_sums_to_one(p in arb_distribution(3, 3)) {
        let s = beta_vector(&p);
        let total = s.weights().iter().fold(r(0, 1), |acc, w| acc + w.clone());
        prop_assert_eq!(total, r(1, 1));
        prop_assert_eq!(s.cumulative(1), r(1, 1));
        for k in 1..=3 {
            prop_assert_eq!(s.cumulative(k), m_k(&p, k));
        }
    }

    #[test]
    fn beta_two_is_causal_weight(p in arb_bits()) {
        prop_assert_eq!(beta_vector(&p).beta(2), monotone_triple(&p).unwrap().m_beta);
    }
}

#[test]
fn scalar_generic_over_rational64() {
    let w = |n, d| Rational64::ratio(n, d);
    let p = FunctionDistribution::from_bits([(Flip, w(1, 3)), (Reset0, w(2, 3))]).unwrap();
    let t = monotone_triple(&p).unwrap();
    assert_eq!(
        (t.m_beta, t.m_abs_alpha, t.m_gamma_beta),
        (w(1, 3), Some(w(1, 1)), w(1, 1))
    );
    let q =
        FunctionDistribution::from_bits([(Flip, w(1, 3)), (Reset0, w(1, 3)), (Reset1, w(1, 3))])
            .unwrap();
    assert!(know_convertible(&p, &q).unwrap().convertible());
    assert!(!know_convertible(&q, &p).unwrap().convertible());
    let s: StochasticMap<Rational64> = p.to_stochastic();
    assert_eq!(s.canonical_preimage(), p);
}

#[test]
fn certificates_reproduce_targets() {
    let mut rng = rng(101);
    for _ in 0..150 {
        let (x, y) = random_sizes(&mut rng, 3);
        let (x2, y2) = random_sizes(&mut rng, 3);
        let p = random_distribution(&mut rng, x, y, 4);
        let sig = CombSignature {
            src_domain: x,
            src_codomain: y,
            tgt_domain: x2,
            tgt_codomain: y2,
        };
        let q = apply_mixture(&random_mixture(&mut rng, sig), &p).unwrap();
        let verdict = know_convertible(&p, &q).unwrap();
        let cert = verdict
            .certificate
            .expect("image of a free operation is reachable");
        assert_eq!(apply_mixture(&cert, &p).unwrap(), q);
        assert!(cert.support().all(|(_, w)| *w > r(0, 1)));
    }
}

#[test]
fn conversion_is_a_preorder() {
    let mut rng = rng(102);
    for _ in 0..60 {
        let p = random_bits(&mut rng);
        assert!(know_convertible(&p, &p).unwrap().convertible());
        let q = apply_mixture(&random_mixture(&mut rng, bit_sig()), &p).unwrap();
        let s = apply_mixture(&random_mixture(&mut rng, bit_sig()), &q).unwrap();
        assert!(know_convertible(&p, &s).unwrap().convertible());
    }
}

#[test]
fn closure_vertices_are_reachable_and_extreme() {
    let mut rng = rng(103);
    for _ in 0..40 {
        let p = random_bits(&mut rng);
        let verts = Converter::default().downward_closure_vertices(&p).unwrap();
        let coords: Vec<Vec<Rational>> = verts.iter().map(Distribution::dense_weights).collect();
        for (i, v) in verts.iter().enumerate() {
            assert!(know_convertible(&p, v).unwrap().convertible());
            let others: Vec<_> = coords
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| c.clone())
                .collect();
            assert!(!in_hull(&others, &coords[i]), "{v} is not extreme");
        }
        let table = table1_vertices(&p).unwrap();
        for t in &table {
            assert!(in_hull(&coords, &t.dense_weights()));
        }
        for v in &verts {
            assert!(table.contains(v), "{v} missing from the closed form");
        }
    }
}

#[test]
fn closure_across_sizes_contains_images() {
    let mut rng = rng(104);
    for _ in 0..20 {
        let p = random_distribution(&mut rng, 3, 2, 3);
        let verts = Converter::default().downward_closure_vertices(&p).unwrap();
        let coords: Vec<Vec<Rational>> = verts.iter().map(Distribution::dense_weights).collect();
        for comb in
            enumerate_extremal_combs(CombSignature::endo(3, 2), DEFAULT_COMB_BUDGET).unwrap()
        {
            let image = apply_extremal(&comb, &p).unwrap();
            assert!(in_hull(&coords, &image.dense_weights()));
        }
    }
}

#[test]
fn extremal_catalog_matches_closed_forms() {
    let mut rng = rng(105);
    let all = BitFunction::ALL;
    for _ in 0..100 {
        let p = random_bits(&mut rng);
        let (alpha, beta, gamma) = oracle_params(&p);
        let a = alpha.unwrap_or_else(|| r(0, 1));
        let g = gamma.unwrap_or_else(|| r(0, 1));
        let apply = |pre, post| apply_extremal(&ExtremalComb::new(pre, post), &p).unwrap();
        // (i)
        assert_eq!(apply(Identity, Identity), p);
        // (ii) post-processing with a reset
        for pre in all {
            assert_eq!(apply(pre, Reset0), bits(&[(Reset0, 1, 1)]));
            assert_eq!(apply(pre, Reset1), bits(&[(Reset1, 1, 1)]));
        }
        // (iii) and (iv) pre-processing with a reset
        let low = (r(1, 1) - g.clone() + beta.clone() * (g.clone() - a.clone())) / r(2, 1);
        let high = (r(1, 1) + g.clone() - beta.clone() * (g.clone() - a.clone())) / r(2, 1);
        let iii = Distribution::from_bits([(Reset0, low.clone()), (Reset1, high.clone())]).unwrap();
        let iv = Distribution::from_bits([(Reset1, low), (Reset0, high)]).unwrap();
        for pre in [Reset0, Reset1] {
            let out = apply(pre, Identity);
            assert!(out.is_free());
            if pre == Reset0 {
                assert_eq!(out, iii);
                assert_eq!(apply(pre, Flip), iv);
            }
        }
        // (v) flips alpha, (vi) flips both, (vii) flips gamma
        assert_eq!(
            apply(Flip, Identity),
            from_params(-a.clone(), beta.clone(), g.clone())
        );
        assert_eq!(
            apply(Identity, Flip),
            from_params(-a.clone(), beta.clone(), -g.clone())
        );
        assert_eq!(
            apply(Flip, Flip),
            from_params(a.clone(), beta.clone(), -g.clone())
        );
        let c = canonical_form(&p).unwrap();
        assert_eq!(canonical_form(&apply(Flip, Identity)).unwrap(), c);
        assert_eq!(canonical_form(&apply(Flip, Flip)).unwrap(), c);
    }
}

#[test]
fn canonical_form_decides_equivalence() {
    let mut rng = rng(106);
    for _ in 0..150 {
        let p = random_bits(&mut rng);
        let q = if rng.gen_bool(0.5) {
            random_bits(&mut rng)
        } else {
            let (pre, post) = (rng.gen_range(0..2), rng.gen_range(0..2));
            let pick = |i| if i == 0 { Identity } else { Flip };
            apply_extremal(&ExtremalComb::new(pick(pre), pick(post)), &p).unwrap()
        };
        let same = canonical_form(&p).unwrap() == canonical_form(&q).unwrap();
        let lp = know_convertible(&p, &q).unwrap().convertible()
            && know_convertible(&q, &p).unwrap().convertible();
        assert_eq!(same, lp, "{p} vs {q}");
        assert_eq!(
            canonical_form(&canonical_form(&p).unwrap().representative()).unwrap(),
            canonical_form(&p).unwrap()
        );
    }
}

#[test]
fn fast_rule_against_lp_on_edge_cases() {
    let pool = [
        bits(&[(Identity, 1, 1)]),
        bits(&[(Flip, 1, 1)]),
        bits(&[(Reset0, 1, 1)]),
        bits(&[(Reset0, 1, 3), (Reset1, 2, 3)]),
        bits(&[(Identity, 1, 2), (Flip, 1, 2)]),
        bits(&[(Identity, 1, 2), (Reset0, 1, 2)]),
        bits(&[(Flip, 1, 3), (Reset0, 2, 3)]),
        bits(&[(Identity, 1, 4), (Reset0, 1, 4), (Reset1, 1, 2)]),
        named("pair1_a"),
        named("pair1_b"),
        named("pair2_a"),
        named("pair2_b"),
        named("pair3_a"),
        named("pair3_b"),
    ];
    for p in &pool {
        for q in &pool {
            assert_eq!(
                bit_convertible_fast(p, q).unwrap(),
                know_convertible(p, q).unwrap().convertible(),
                "{p} -> {q}"
            );
        }
    }
}

#[test]
fn postselection_matches_gamma_beta_monotone() {
    let mut rng = rng(107);
    for _ in 0..200 {
        let p = random_bits(&mut rng);
        assert_eq!(
            max_postselected_connection(&p).unwrap(),
            oracle_gamma_beta(&p),
            "{p}"
        );
        assert_eq!(
            monotone_triple(&p).unwrap().m_gamma_beta,
            oracle_gamma_beta(&p)
        );
    }
}

#[test]
fn ace_is_monotone_under_free_operations() {
    let mut rng = rng(108);
    for _ in 0..500 {
        let p = random_bits(&mut rng);
        let q = apply_mixture(&random_mixture(&mut rng, bit_sig()), &p).unwrap();
        assert!(abs(ace_dist(&p).unwrap()) >= abs(ace_dist(&q).unwrap()));
    }
}

#[test]
fn image_size_monotones_are_monotone() {
    let mut rng = rng(109);
    for _ in 0..300 {
        let (x, y) = random_sizes(&mut rng, 3);
        let p = random_distribution(&mut rng, x, y, 4);
        let comb = random_comb(&mut rng, CombSignature::endo(x, y));
        let q = apply_extremal(&comb, &p).unwrap();
        for k in 1..=y {
            assert!(m_k(&p, k) >= m_k(&q, k));
        }
        assert!(alt_convertible(&p, &q).unwrap());
    }
}

#[test]
fn preprocessing_shifts_weight_between_sectors() {
    let p = named("sector_shift");
    let f2 = FiniteFunction::new(3, vec![0, 0, 2]).unwrap();
    let f3 = FiniteFunction::new(3, vec![0, 2, 2]).unwrap();
    let q = apply_extremal(&ExtremalComb::new(f2.clone(), f3), &p).unwrap();
    assert_eq!(q, Distribution::point(f2));
    assert_eq!(q, named("sector_shift_f2"));
    let (sp, sq) = (beta_vector(&p), beta_vector(&q));
    assert!(sq.beta(2) > sp.beta(2));
    assert!(sq.beta(3) < sp.beta(3));
}

#[test]
fn lp_verdict_implies_spectrum_dominance() {
    let mut rng = rng(110);
    for _ in 0..120 {
        let (x, y) = random_sizes(&mut rng, 3);
        let p = random_distribution(&mut rng, x, y, 3);
        let q = if rng.gen_bool(0.5) {
            random_distribution(&mut rng, x, y, 3)
        } else {
            apply_mixture(&random_mixture(&mut rng, CombSignature::endo(x, y)), &p).unwrap()
        };
        if know_convertible(&p, &q).unwrap().convertible() {
            assert!(alt_convertible(&p, &q).unwrap(), "{p} -> {q}");
        }
    }
}

#[test]
fn spectrum_dominance_does_not_imply_conversion() {
    let a = bits(&[(Identity, 1, 2), (Flip, 1, 2)]);
    let b = bits(&[(Identity, 1, 2), (Reset0, 1, 2)]);
    assert!(alt_convertible(&a, &b).unwrap());
    assert!(!know_convertible(&a, &b).unwrap().convertible());
    assert!(!alt_convertible(&b, &a).unwrap());
}

#[test]
fn guessing_probability_extremes() {
    let mut rng = rng(111);
    for n in 1..=3 {
        let perms: Vec<FiniteFunction> = FiniteFunction::all(n, n)
            .filter(|f| f.image_size() == n)
            .collect();
        for _ in 0..10 {
            let den = rng.gen_range(1..=12);
            let prior = Prior::new(composition(&mut rng, den, n)).unwrap();
            for f in &perms {
                assert_eq!(
                    guessing_probability(&Distribution::point(f.clone()), &prior).unwrap(),
                    r(1, 1)
                );
            }
            let free = Distribution::new(
                n,
                n,
                (0..n).map(|v| (FiniteFunction::constant(n, n, v).unwrap(), r(1, n as i64))),
            )
            .unwrap();
            let best = prior.weights().iter().max().unwrap().clone();
            assert_eq!(guessing_probability(&free, &prior).unwrap(), best);
        }
    }
}
