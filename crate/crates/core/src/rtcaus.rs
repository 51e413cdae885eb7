//! Convertibility of deterministic functions under local pre/post-processing.
//!
//! A function `f` converts into `g` by `g = post ∘ f ∘ pre` exactly when
//! `|Im f| ≥ |Im g|`, so the order is total and `log₂|Im f|` is a complete
//! monotone.

use std::fmt;

use crate::error::{Error, Result};
use crate::function::{compose_functions, FiniteFunction};

/// A free deterministic comb: `pre: X′ -> X`, `post: Y -> Y′`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeterministicWitness {
    pub pre: FiniteFunction,
    pub post: FiniteFunction,
}

impl DeterministicWitness {
    pub fn apply(&self, f: &FiniteFunction) -> Result<FiniteFunction> {
        compose_functions(&self.post, &compose_functions(f, &self.pre)?)
    }
}

/// Constant functions carry no causal influence.
pub fn is_free_function(f: &FiniteFunction) -> bool {
    f.image_size() == 1
}

pub fn caus_convertible(f: &FiniteFunction, g: &FiniteFunction) -> bool {
    f.image_size() >= g.image_size()
}

/// `log₂|Im f|`, kept symbolic: the image size is exact, the logarithm is
/// exact only for powers of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CausalBits {
    pub image_size: usize,
}

impl CausalBits {
    /// Whole number of bits when the image size is a power of two.
    pub fn exact(&self) -> Option<u32> {
        self.image_size
            .is_power_of_two()
            .then(|| self.image_size.trailing_zeros())
    }

    pub fn to_f64(&self) -> f64 {
        (self.image_size as f64).log2()
    }
}

impl fmt::Display for CausalBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(bits) => write!(f, "{bits}"),
            None => write!(f, "log2({})", self.image_size),
        }
    }
}

pub fn caus_monotone(f: &FiniteFunction) -> CausalBits {
    CausalBits {
        image_size: f.image_size(),
    }
}

/// Builds `(pre, post)` with `post ∘ f ∘ pre = g`.
///
/// Uses the factorizations `f = f_i ∘ f_s`, `g = g_i ∘ g_s` through the
/// (ascending) images, the order-preserving injection `i: Im g -> Im f` and
/// its left inverse `π`:
/// `pre = f_s⁻¹ ∘ i ∘ g_s`, `post = g_i ∘ π ∘ f_i⁻¹`.
pub fn conversion_witness(f: &FiniteFunction, g: &FiniteFunction) -> Result<DeterministicWitness> {
    if !caus_convertible(f, g) {
        return Err(Error::NotConvertible);
    }
    let f_parts = Factorization::of(f);
    let g_parts = Factorization::of(g);
    let (nf, ng) = (f_parts.image.len(), g_parts.image.len());

    let inject = FiniteFunction::new(nf, (0..ng).collect())?;
    let project = FiniteFunction::new(ng, (0..nf).map(|k| if k < ng { k } else { 0 }).collect())?;

    let pre = compose_functions(
        &f_parts.surjection_right_inverse,
        &compose_functions(&inject, &g_parts.surjection)?,
    )?;
    let post = compose_functions(
        &g_parts.injection,
        &compose_functions(&project, &f_parts.injection_left_inverse)?,
    )?;
    let witness = DeterministicWitness { pre, post };
    assert_eq!(
        &witness.apply(f)?,
        g,
        "conversion witness failed to reproduce the target"
    );
    Ok(witness)
}

/// `f = injection ∘ surjection`, with the image indexed `0..|Im f|` in ascending order.
struct Factorization {
    image: Vec<usize>,
    surjection: FiniteFunction,
    injection: FiniteFunction,
    surjection_right_inverse: FiniteFunction,
    injection_left_inverse: FiniteFunction,
}

impl Factorization {
    fn of(f: &FiniteFunction) -> Self {
        let image = f.image();
        let rank = |y: usize| image.binary_search(&y).ok();
        let n = image.len();
        let surjection = FiniteFunction::new(
            n,
            f.table()
                .iter()
                .map(|&y| rank(y).expect("in image"))
                .collect(),
        )
        .expect("valid surjection");
        let injection =
            FiniteFunction::new(f.codomain_size(), image.clone()).expect("valid injection");
        // smallest preimage of each image point
        let surjection_right_inverse = FiniteFunction::new(
            f.domain_size(),
            image
                .iter()
                .map(|&y| f.table().iter().position(|&v| v == y).expect("in image"))
                .collect(),
        )
        .expect("valid section");
        // points outside the image go to the smallest image point
        let injection_left_inverse = FiniteFunction::new(
            n,
            (0..f.codomain_size())
                .map(|y| rank(y).unwrap_or(0))
                .collect(),
        )
        .expect("valid retraction");
        Self {
            image,
            surjection,
            injection,
            surjection_right_inverse,
            injection_left_inverse,
        }
    }
}
