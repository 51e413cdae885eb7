#![allow(dead_code)]

use causinf::function::BitFunction::{self, Flip, Identity, Reset0, Reset1};
use causinf::rtknowcaus::{CombSignature, ExtremalComb};
use causinf::{cli, Distribution, FiniteFunction, Mixture, Rational, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named(name: &str) -> Distribution {
    cli::library::get(name).unwrap_or_else(|| panic!("unknown built-in {name}"))
}

pub fn bits(entries: &[(BitFunction, i64, i64)]) -> Distribution {
    Distribution::from_bits(entries.iter().map(|&(b, n, d)| (b, r(n, d)))).unwrap()
}

/// Uniform composition of `den` into `parts` nonnegative integers, as fractions of `den`.
pub fn composition(rng: &mut ChaCha8Rng, den: i64, parts: usize) -> Vec<Rational> {
    let mut cuts: Vec<i64> = (0..parts - 1).map(|_| rng.gen_range(0..=den)).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([den]) {
        out.push(r(c - prev, den));
        prev = c;
    }
    out
}

/// Random bit resource with weights over a common denominator at most 32.
pub fn random_bits(rng: &mut ChaCha8Rng) -> Distribution {
    let den = rng.gen_range(1..=32);
    let w = composition(rng, den, 4);
    Distribution::from_bits(BitFunction::ALL.into_iter().zip(w)).unwrap()
}

pub fn random_nonfree_bits(rng: &mut ChaCha8Rng) -> Distribution {
    loop {
        let p = random_bits(rng);
        if !p.is_free() {
            return p;
        }
    }
}

pub fn random_function(rng: &mut ChaCha8Rng, domain: usize, codomain: usize) -> FiniteFunction {
    FiniteFunction::new(
        codomain,
        (0..domain).map(|_| rng.gen_range(0..codomain)).collect(),
    )
    .unwrap()
}

/// Random resource on up to `max_support` random functions.
pub fn random_distribution(
    rng: &mut ChaCha8Rng,
    domain: usize,
    codomain: usize,
    max_support: usize,
) -> Distribution {
    let k = rng.gen_range(1..=max_support);
    let den = rng.gen_range(1..=24);
    let w = composition(rng, den, k);
    let entries: Vec<_> = w
        .into_iter()
        .map(|w| (random_function(rng, domain, codomain), w))
        .collect();
    Distribution::new(domain, codomain, entries).unwrap()
}

pub fn random_sizes(rng: &mut ChaCha8Rng, max: usize) -> (usize, usize) {
    (rng.gen_range(1..=max), rng.gen_range(1..=max))
}

pub fn random_comb(rng: &mut ChaCha8Rng, sig: CombSignature) -> ExtremalComb {
    ExtremalComb::new(
        random_function(rng, sig.tgt_domain, sig.src_domain),
        random_function(rng, sig.src_codomain, sig.tgt_codomain),
    )
}

/// Random convex mixture of up to four extremal combs.
pub fn random_mixture(rng: &mut ChaCha8Rng, sig: CombSignature) -> Mixture {
    let k = rng.gen_range(1..=4);
    let den = rng.gen_range(1..=16);
    let w = composition(rng, den, k);
    Mixture::new(w.into_iter().map(|w| (random_comb(rng, sig), w))).unwrap()
}

pub fn bit_sig() -> CombSignature {
    CombSignature::endo(2, 2)
}

/// Weights read off directly from `(α, β, γ)`, written out term by term.
pub fn from_params(alpha: Rational, beta: Rational, gamma: Rational) -> Distribution {
    let one = r(1, 1);
    let two = r(2, 1);
    let i = beta.clone() * (one.clone() - alpha.clone()) / two.clone();
    let f = beta.clone() * (one.clone() + alpha) / two.clone();
    let r0 = (one.clone() - beta.clone()) * (one.clone() - gamma.clone()) / two.clone();
    let r1 = (one.clone() - beta) * (one + gamma) / two;
    Distribution::from_bits([(Identity, i), (Flip, f), (Reset0, r0), (Reset1, r1)]).unwrap()
}

/// Hand-computed `(β, α, γ)`, with absent parameters as `None`.
pub fn oracle_params(p: &Distribution) -> (Option<Rational>, Rational, Option<Rational>) {
    let w = |b| p.bit_weight(b);
    let beta = w(Identity) + w(Flip);
    let alpha = if beta == r(0, 1) {
        None
    } else {
        Some((w(Flip) - w(Identity)) / beta.clone())
    };
    let rest = r(1, 1) - beta.clone();
    let gamma = if rest == r(0, 1) {
        None
    } else {
        Some((w(Reset1) - w(Reset0)) / rest)
    };
    (alpha, beta, gamma)
}

/// Hand-computed `β / (1 − |γ|(1−β))` with the free and `β = 1` conventions.
pub fn oracle_gamma_beta(p: &Distribution) -> Rational {
    let (_, beta, gamma) = oracle_params(p);
    if beta == r(0, 1) {
        return r(0, 1);
    }
    match gamma {
        None => r(1, 1),
        Some(g) => {
            let g = if g < r(0, 1) { -g } else { g };
            beta.clone() / (r(1, 1) - g * (r(1, 1) - beta))
        }
    }
}

pub fn abs(v: Rational) -> Rational {
    if v < r(0, 1) {
        -v
    } else {
        v
    }
}

pub fn sorted(mut v: Vec<Distribution>) -> Vec<Distribution> {
    v.sort();
    v
}

pub fn shuffle<T>(rng: &mut ChaCha8Rng, v: &mut [T]) {
    v.shuffle(rng);
}

/// `M_k` with `M_k = 0` past the codomain.
pub fn m_k(p: &Distribution, k: usize) -> Rational {
    p.support()
        .filter(|(f, _)| f.image_size() >= k)
        .fold(r(0, 1), |acc, (_, w)| acc + w.clone())
}

/// Does `post ∘ f ∘ pre = g` for some deterministic `pre`, `post`? Brute force.
pub fn brute_force_convertible(f: &FiniteFunction, g: &FiniteFunction) -> bool {
    FiniteFunction::all(g.domain_size(), f.domain_size()).any(|pre| {
        FiniteFunction::all(f.codomain_size(), g.codomain_size())
            .any(|post| post.after(&f.after(&pre).unwrap()).unwrap() == *g)
    })
}
