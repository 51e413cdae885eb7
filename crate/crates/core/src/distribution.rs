//! Exact probability distributions over finite functions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::function::{compose_functions, BitFunction, FiniteFunction};
use crate::scalar::{sum, Scalar};
use crate::stochastic::StochasticMap;

/// A distribution over functions `X -> Y` with exact weights.
///
/// The support never holds a zero weight and the weights always sum to
/// exactly one, so two distributions are equal iff they are the same
/// probability measure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionDistribution<T> {
    domain: usize,
    codomain: usize,
    weights: BTreeMap<FiniteFunction, T>,
}

impl<T: Scalar> FunctionDistribution<T> {
    /// Accumulates repeated functions, drops zero weights and insists on an
    /// exact total of one.
    pub fn new(
        domain: usize,
        codomain: usize,
        entries: impl IntoIterator<Item = (FiniteFunction, T)>,
    ) -> Result<Self> {
        if domain == 0 || codomain == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut weights = BTreeMap::new();
        for (f, w) in entries {
            if f.domain_size() != domain || f.codomain_size() != codomain {
                return Err(Error::size(format!(
                    "function {f:?} does not map {domain} -> {codomain}"
                )));
            }
            if w.is_negative() {
                return Err(Error::NegativeWeight(w.to_string()));
            }
            accumulate(&mut weights, f, w);
        }
        weights.retain(|_, w: &mut T| !w.is_zero());
        let total: T = sum(weights.values());
        if !total.is_one() {
            return Err(Error::NonNormalized(total.to_string()));
        }
        Ok(Self {
            domain,
            codomain,
            weights,
        })
    }

    /// The point distribution `[f]`.
    pub fn point(f: FiniteFunction) -> Self {
        let (domain, codomain) = (f.domain_size(), f.codomain_size());
        Self {
            domain,
            codomain,
            weights: BTreeMap::from([(f, T::one())]),
        }
    }

    /// Bit-to-bit distribution from weights on `I`, `F`, `R₀`, `R₁`.
    pub fn from_bits(entries: impl IntoIterator<Item = (BitFunction, T)>) -> Result<Self> {
        Self::new(2, 2, entries.into_iter().map(|(b, w)| (b.function(), w)))
    }

    /// Internal constructor for weight maps that are normalized by construction.
    pub(crate) fn from_normalized(
        domain: usize,
        codomain: usize,
        mut weights: BTreeMap<FiniteFunction, T>,
    ) -> Self {
        weights.retain(|_, w| !w.is_zero());
        debug_assert!(sum(weights.values()).is_one());
        Self {
            domain,
            codomain,
            weights,
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn weight(&self, f: &FiniteFunction) -> T {
        self.weights.get(f).cloned().unwrap_or_else(T::zero)
    }

    pub fn bit_weight(&self, b: BitFunction) -> T {
        self.weight(&b.function())
    }

    /// Support in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&FiniteFunction, &T)> {
        self.weights.iter()
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_point(&self) -> bool {
        self.weights.len() == 1
    }

    pub fn is_bit_to_bit(&self) -> bool {
        self.domain == 2 && self.codomain == 2
    }

    pub(crate) fn require_bits(&self) -> Result<()> {
        if self.is_bit_to_bit() {
            Ok(())
        } else {
            Err(Error::size(format!(
                "expected a bit-to-bit resource, got {} -> {}",
                self.domain, self.codomain
            )))
        }
    }

    /// Free resources put all their weight on constant functions.
    pub fn is_free(&self) -> bool {
        self.weights.keys().all(FiniteFunction::is_constant)
    }

    /// Image of the distribution under `f ↦ map(f)`.
    pub fn pushforward(
        &self,
        domain: usize,
        codomain: usize,
        mut map: impl FnMut(&FiniteFunction) -> FiniteFunction,
    ) -> Self {
        let mut weights = BTreeMap::new();
        for (f, w) in &self.weights {
            accumulate(&mut weights, map(f), w.clone());
        }
        Self::from_normalized(domain, codomain, weights)
    }

    /// Convex combination `Σ cᵢ Pᵢ`; the coefficients must be a probability vector.
    pub fn mix<'a>(parts: impl IntoIterator<Item = (T, &'a Self)>) -> Result<Self> {
        let mut weights = BTreeMap::new();
        let mut shape = None;
        let mut total = T::zero();
        for (c, p) in parts {
            if c.is_negative() {
                return Err(Error::NegativeWeight(c.to_string()));
            }
            match shape {
                None => shape = Some((p.domain, p.codomain)),
                Some(s) if s != (p.domain, p.codomain) => {
                    return Err(Error::size("mixing distributions of different signatures"))
                }
                _ => {}
            }
            total = total + c.clone();
            for (f, w) in &p.weights {
                accumulate(&mut weights, f.clone(), c.clone() * w.clone());
            }
        }
        let (domain, codomain) = shape.ok_or(Error::EmptyAlphabet)?;
        if !total.is_one() {
            return Err(Error::NonNormalized(total.to_string()));
        }
        Ok(Self::from_normalized(domain, codomain, weights))
    }

    /// Coordinates on the full function simplex, indexed in lexicographic table order.
    pub fn dense_weights(&self) -> Vec<T> {
        FiniteFunction::all(self.domain, self.codomain)
            .map(|f| self.weight(&f))
            .collect()
    }

    /// The induced stochastic map `Γ[P]`.
    pub fn to_stochastic(&self) -> StochasticMap<T> {
        let mut entries = vec![vec![T::zero(); self.domain]; self.codomain];
        for (f, w) in &self.weights {
            for (x, &y) in f.table().iter().enumerate() {
                entries[y][x] = entries[y][x].clone() + w.clone();
            }
        }
        StochasticMap::from_validated(self.domain, self.codomain, entries)
    }
}

fn accumulate<T: Scalar>(weights: &mut BTreeMap<FiniteFunction, T>, f: FiniteFunction, w: T) {
    let slot = weights.entry(f).or_insert_with(T::zero);
    *slot = slot.clone() + w;
}

/// `outer ∘ inner`: the weight of `h` collects `outer(f)·inner(f′)` over all `f ∘ f′ = h`.
pub fn compose_distributions<T: Scalar>(
    outer: &FunctionDistribution<T>,
    inner: &FunctionDistribution<T>,
) -> Result<FunctionDistribution<T>> {
    if inner.codomain != outer.domain {
        return Err(Error::size(format!(
            "cannot compose: inner codomain {} != outer domain {}",
            inner.codomain, outer.domain
        )));
    }
    let mut weights = BTreeMap::new();
    for (f, wf) in &outer.weights {
        for (g, wg) in &inner.weights {
            accumulate(
                &mut weights,
                compose_functions(f, g)?,
                wf.clone() * wg.clone(),
            );
        }
    }
    Ok(FunctionDistribution::from_normalized(
        inner.domain,
        outer.codomain,
        weights,
    ))
}

pub fn to_stochastic<T: Scalar>(p: &FunctionDistribution<T>) -> StochasticMap<T> {
    p.to_stochastic()
}

impl<T: Scalar> fmt::Debug for FunctionDistribution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> fmt::Display for FunctionDistribution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (func, w)) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}[{func}]")?;
        }
        Ok(())
    }
}
