//! Convertibility of distributions over functions under common-cause combs.
//!
//! The free operations are convex mixtures of extremal combs, each a pair
//! `(pre: X′ -> X, post: Y -> Y′)` acting by `f ↦ post ∘ f ∘ pre`. Because
//! the action is linear, the set reachable from a resource `P` is the convex
//! hull of the images of `P` under the finitely many extremal combs. Deciding
//! `P -> Q` is therefore a hull-membership problem, solved exactly.

use std::collections::{BTreeMap, BTreeSet};

use crate::distribution::FunctionDistribution;
use crate::error::{Error, Result};
use crate::function::{compose_functions, FiniteFunction};
use crate::hull::convex_weights;
use crate::scalar::{sum, Scalar};

/// Default cap on the number of extremal combs enumerated for one decision.
pub const DEFAULT_COMB_BUDGET: usize = 1_000_000;

/// A deterministic comb: pre-process the input, post-process the output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtremalComb {
    pub pre: FiniteFunction,
    pub post: FiniteFunction,
}

impl ExtremalComb {
    pub fn new(pre: impl Into<FiniteFunction>, post: impl Into<FiniteFunction>) -> Self {
        Self {
            pre: pre.into(),
            post: post.into(),
        }
    }

    pub fn identity(domain: usize, codomain: usize) -> Self {
        Self::new(
            FiniteFunction::identity(domain),
            FiniteFunction::identity(codomain),
        )
    }

    pub fn apply_to_function(&self, f: &FiniteFunction) -> Result<FiniteFunction> {
        compose_functions(&self.post, &compose_functions(f, &self.pre)?)
    }

    fn check<T: Scalar>(&self, p: &FunctionDistribution<T>) -> Result<()> {
        if self.pre.codomain_size() != p.domain_size()
            || self.post.domain_size() != p.codomain_size()
        {
            return Err(Error::size(format!(
                "comb ({:?}, {:?}) does not fit a {} -> {} resource",
                self.pre,
                self.post,
                p.domain_size(),
                p.codomain_size()
            )));
        }
        Ok(())
    }
}

/// Alphabet sizes of a conversion `(X -> Y) ⇒ (X′ -> Y′)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CombSignature {
    pub src_domain: usize,
    pub src_codomain: usize,
    pub tgt_domain: usize,
    pub tgt_codomain: usize,
}

impl CombSignature {
    pub fn between<T: Scalar>(
        src: &FunctionDistribution<T>,
        tgt: &FunctionDistribution<T>,
    ) -> Self {
        Self {
            src_domain: src.domain_size(),
            src_codomain: src.codomain_size(),
            tgt_domain: tgt.domain_size(),
            tgt_codomain: tgt.codomain_size(),
        }
    }

    pub fn endo(domain: usize, codomain: usize) -> Self {
        Self {
            src_domain: domain,
            src_codomain: codomain,
            tgt_domain: domain,
            tgt_codomain: codomain,
        }
    }

    /// `src_domain^tgt_domain · tgt_codomain^src_codomain`, `None` on overflow.
    pub fn comb_count(&self) -> Option<u128> {
        FiniteFunction::count(self.tgt_domain, self.src_domain)?
            .checked_mul(FiniteFunction::count(self.src_codomain, self.tgt_codomain)?)
    }
}

/// All extremal combs of a signature, `pre`-major in lexicographic order.
pub fn enumerate_extremal_combs(sig: CombSignature, budget: usize) -> Result<Vec<ExtremalComb>> {
    if [
        sig.src_domain,
        sig.src_codomain,
        sig.tgt_domain,
        sig.tgt_codomain,
    ]
    .contains(&0)
    {
        return Err(Error::EmptyAlphabet);
    }
    let count = sig.comb_count();
    match count {
        Some(n) if n <= budget as u128 => {}
        _ => {
            return Err(Error::ResourceBudgetExceeded {
                required: count.map_or_else(|| "overflow".to_string(), |n| n.to_string()),
                budget,
            })
        }
    }
    let posts: Vec<_> = FiniteFunction::all(sig.src_codomain, sig.tgt_codomain).collect();
    Ok(FiniteFunction::all(sig.tgt_domain, sig.src_domain)
        .flat_map(|pre| {
            posts
                .iter()
                .map(move |post| ExtremalComb::new(pre.clone(), post.clone()))
        })
        .collect())
}

/// Pushforward of `p` under `f ↦ post ∘ f ∘ pre`.
pub fn apply_extremal<T: Scalar>(
    comb: &ExtremalComb,
    p: &FunctionDistribution<T>,
) -> Result<FunctionDistribution<T>> {
    comb.check(p)?;
    Ok(
        p.pushforward(comb.pre.domain_size(), comb.post.codomain_size(), |f| {
            comb.apply_to_function(f).expect("sizes checked")
        }),
    )
}

/// A free operation: a convex mixture of extremal combs sharing one signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombMixture<T> {
    weights: BTreeMap<ExtremalComb, T>,
}

impl<T: Scalar> CombMixture<T> {
    pub fn new(entries: impl IntoIterator<Item = (ExtremalComb, T)>) -> Result<Self> {
        let mut weights: BTreeMap<ExtremalComb, T> = BTreeMap::new();
        for (c, w) in entries {
            if w.is_negative() {
                return Err(Error::NegativeWeight(w.to_string()));
            }
            let slot = weights.entry(c).or_insert_with(T::zero);
            *slot = slot.clone() + w;
        }
        weights.retain(|_, w| !w.is_zero());
        let total: T = sum(weights.values());
        if !total.is_one() {
            return Err(Error::NonNormalized(total.to_string()));
        }
        let mut shapes = weights.keys().map(|c| {
            (
                c.pre.domain_size(),
                c.pre.codomain_size(),
                c.post.domain_size(),
                c.post.codomain_size(),
            )
        });
        let first = shapes.next();
        if shapes.any(|s| Some(s) != first) {
            return Err(Error::size("combs in a mixture must share a signature"));
        }
        Ok(Self { weights })
    }

    pub fn point(comb: ExtremalComb) -> Self {
        Self {
            weights: BTreeMap::from([(comb, T::one())]),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (&ExtremalComb, &T)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn apply(&self, p: &FunctionDistribution<T>) -> Result<FunctionDistribution<T>> {
        apply_mixture(self, p)
    }
}

pub fn apply_mixture<T: Scalar>(
    mixture: &CombMixture<T>,
    p: &FunctionDistribution<T>,
) -> Result<FunctionDistribution<T>> {
    let images = mixture
        .weights
        .iter()
        .map(|(c, w)| Ok((w.clone(), apply_extremal(c, p)?)))
        .collect::<Result<Vec<_>>>()?;
    FunctionDistribution::mix(images.iter().map(|(w, d)| (w.clone(), d)))
}

/// Outcome of a convertibility query; the certificate is present iff convertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionVerdict<T> {
    pub certificate: Option<CombMixture<T>>,
}

impl<T> ConversionVerdict<T> {
    pub fn convertible(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Decision procedures parameterized by the comb budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Converter {
    pub budget: usize,
}

impl Default for Converter {
    fn default() -> Self {
        Self {
            budget: DEFAULT_COMB_BUDGET,
        }
    }
}

/// Distinct images of a resource, each tagged with the first comb producing it.
struct ImageSet<T> {
    images: Vec<(FunctionDistribution<T>, ExtremalComb)>,
}

impl<T: Scalar> ImageSet<T> {
    fn of(p: &FunctionDistribution<T>, sig: CombSignature, budget: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut images = Vec::new();
        for comb in enumerate_extremal_combs(sig, budget)? {
            let image = apply_extremal(&comb, p)?;
            if seen.insert(image.clone()) {
                images.push((image, comb));
            }
        }
        Ok(Self { images })
    }
}

/// Shared coordinates for a family of distributions: one axis per function
/// appearing in any support.
fn coordinates<'a, T: Scalar>(
    dists: impl IntoIterator<Item = &'a FunctionDistribution<T>>,
) -> BTreeMap<FiniteFunction, usize> {
    let mut axes = BTreeMap::new();
    for d in dists {
        for (f, _) in d.support() {
            let next = axes.len();
            axes.entry(f.clone()).or_insert(next);
        }
    }
    axes
}

fn embed<T: Scalar>(d: &FunctionDistribution<T>, axes: &BTreeMap<FiniteFunction, usize>) -> Vec<T> {
    let mut v = vec![T::zero(); axes.len()];
    for (f, w) in d.support() {
        v[axes[f]] = w.clone();
    }
    v
}

fn hull_weights<T: Scalar>(
    points: &[&FunctionDistribution<T>],
    target: &FunctionDistribution<T>,
) -> Option<Vec<T>> {
    let axes = coordinates(points.iter().copied().chain([target]));
    let vecs: Vec<Vec<T>> = points.iter().map(|p| embed(p, &axes)).collect();
    convex_weights(&vecs, &embed(target, &axes))
}

impl Converter {
    pub fn new(budget: usize) -> Self {
        Self { budget }
    }

    pub fn enumerate(&self, sig: CombSignature) -> Result<Vec<ExtremalComb>> {
        enumerate_extremal_combs(sig, self.budget)
    }

    /// Is `q` in the convex hull of the extremal images of `p`?
    pub fn know_convertible<T: Scalar>(
        &self,
        p: &FunctionDistribution<T>,
        q: &FunctionDistribution<T>,
    ) -> Result<ConversionVerdict<T>> {
        let set = ImageSet::of(p, CombSignature::between(p, q), self.budget)?;
        let points: Vec<_> = set.images.iter().map(|(d, _)| d).collect();
        let certificate = match hull_weights(&points, q) {
            None => None,
            Some(weights) => {
                let mixture = CombMixture::new(
                    set.images
                        .iter()
                        .zip(weights)
                        .map(|((_, comb), w)| (comb.clone(), w)),
                )?;
                assert_eq!(
                    &apply_mixture(&mixture, p)?,
                    q,
                    "certificate does not reproduce the target"
                );
                Some(mixture)
            }
        };
        Ok(ConversionVerdict { certificate })
    }

    /// Vertices of the downward closure of `p` within its own signature.
    pub fn downward_closure_vertices<T: Scalar>(
        &self,
        p: &FunctionDistribution<T>,
    ) -> Result<Vec<FunctionDistribution<T>>> {
        let sig = CombSignature::endo(p.domain_size(), p.codomain_size());
        let mut candidates: Vec<_> = ImageSet::of(p, sig, self.budget)?
            .images
            .into_iter()
            .map(|(d, _)| d)
            .collect();
        candidates.sort();
        let mut i = 0;
        while i < candidates.len() {
            let others: Vec<_> = candidates
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, d)| d)
                .collect();
            if !others.is_empty() && hull_weights(&others, &candidates[i]).is_some() {
                candidates.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(candidates)
    }

    /// Pairwise order, equivalence classes, and the transitive reduction.
    pub fn hasse<T: Scalar>(
        &self,
        resources: &[(String, FunctionDistribution<T>)],
    ) -> Result<HasseGraph> {
        if let Some((_, first)) = resources.first() {
            let shape = (first.domain_size(), first.codomain_size());
            if let Some((name, _)) = resources
                .iter()
                .find(|(_, d)| (d.domain_size(), d.codomain_size()) != shape)
            {
                return Err(Error::size(format!(
                    "resource {name} does not share the {} -> {} signature",
                    shape.0, shape.1
                )));
            }
        }
        let n = resources.len();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
            for j in 0..n {
                if i != j {
                    reach[i][j] = self
                        .know_convertible(&resources[i].1, &resources[j].1)?
                        .convertible();
                }
            }
        }
        Ok(HasseGraph::from_reachability(
            resources.iter().map(|(name, _)| name.clone()).collect(),
            &reach,
        ))
    }
}

/// Equivalence classes of resources and the covering relation between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    /// Member labels per class, classes in order of first appearance.
    pub classes: Vec<Vec<String>>,
    /// `(upper, lower)` class indices; `upper` converts into `lower` with no
    /// intermediate class in between.
    pub edges: Vec<(usize, usize)>,
}

impl HasseGraph {
    /// Builds the graph from a reflexive, transitive reachability matrix.
    pub fn from_reachability(labels: Vec<String>, reach: &[Vec<bool>]) -> Self {
        let n = labels.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<String>> = Vec::new();
        let mut reps = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for j in i..n {
                if class_of[j] == usize::MAX && reach[i][j] && reach[j][i] {
                    class_of[j] = id;
                    members.push(labels[j].clone());
                }
            }
            classes.push(members);
            reps.push(i);
        }
        let k = classes.len();
        let above = |a: usize, b: usize| a != b && reach[reps[a]][reps[b]];
        let mut edges = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if above(a, b) && !(0..k).any(|c| c != a && c != b && above(a, c) && above(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        Self { classes, edges }
    }

    pub fn class_of(&self, label: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|members| members.iter().any(|m| m == label))
    }
}

pub fn is_free_resource<T: Scalar>(p: &FunctionDistribution<T>) -> bool {
    p.is_free()
}

pub fn know_convertible<T: Scalar>(
    p: &FunctionDistribution<T>,
    q: &FunctionDistribution<T>,
) -> Result<ConversionVerdict<T>> {
    Converter::default().know_convertible(p, q)
}

pub fn downward_closure_vertices<T: Scalar>(
    p: &FunctionDistribution<T>,
) -> Result<Vec<FunctionDistribution<T>>> {
    Converter::default().downward_closure_vertices(p)
}

pub fn hasse<T: Scalar>(resources: &[(String, FunctionDistribution<T>)]) -> Result<HasseGraph> {
    Converter::default().hasse(resources)
}
