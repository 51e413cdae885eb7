//! Image-size spectra and the cumulative monotones built on them.
//!
//! `β_k` is the total weight on functions with image size `k`. The tail sums
//! `M_k = Σ_{j≥k} β_j` never increase under free operations, and dominance
//! in all of them decides convertibility in the image-size theory.

use crate::distribution::FunctionDistribution;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `weights[k - 1] = β_k` for `k = 1..=n`, `n` the codomain size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSpectrum<T> {
    weights: Vec<T>,
}

impl<T: Scalar> BetaSpectrum<T> {
    /// Length of the spectrum, the codomain size.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `β_k`, zero outside `1..=n`.
    pub fn beta(&self, k: usize) -> T {
        k.checked_sub(1)
            .and_then(|i| self.weights.get(i))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// `M_k = Σ_{j≥k} β_j`; `M_k = 1` for `k ≤ 1` and `0` for `k > n`.
    pub fn cumulative(&self, k: usize) -> T {
        self.weights
            .iter()
            .skip(k.max(1) - 1)
            .fold(T::zero(), |acc, w| acc + w.clone())
    }

    /// `[M_1, …, M_n]`.
    pub fn cumulative_monotones(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.weights.len()];
        let mut acc = T::zero();
        for (k, w) in self.weights.iter().enumerate().rev() {
            acc = acc + w.clone();
            out[k] = acc.clone();
        }
        out
    }

    /// `M_k(self) ≥ M_k(other)` for every `k`.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::size(format!(
                "spectra over codomains of size {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .cumulative_monotones()
            .iter()
            .zip(other.cumulative_monotones())
            .all(|(a, b)| *a >= b))
    }
}

pub fn beta_vector<T: Scalar>(p: &FunctionDistribution<T>) -> BetaSpectrum<T> {
    let mut weights = vec![T::zero(); p.codomain_size()];
    for (f, w) in p.support() {
        let k = f.image_size() - 1;
        weights[k] = weights[k].clone() + w.clone();
    }
    BetaSpectrum { weights }
}

/// `[M_1, …, M_n]` of the resource.
pub fn cumulative_monotones<T: Scalar>(p: &FunctionDistribution<T>) -> Vec<T> {
    beta_vector(p).cumulative_monotones()
}

/// Convertibility in the theory whose complete monotones are the `M_k`.
pub fn alt_convertible<T: Scalar>(
    p: &FunctionDistribution<T>,
    q: &FunctionDistribution<T>,
) -> Result<bool> {
    beta_vector(p).dominates(&beta_vector(q))
}
