//! The bit-to-bit scenario in closed form.
//!
//! A resource over `{I, F, R₀, R₁}` is written as
//! `β((1−α)/2 [I] + (1+α)/2 [F]) + (1−β)((1−γ)/2 [R₀] + (1+γ)/2 [R₁])`.
//! The monotones `β`, `|α|` and `β / (1 − |γ|(1−β))` decide convertibility
//! between such resources completely.

use num_traits::Signed;

use crate::distribution::FunctionDistribution;
use crate::error::{Error, Result};
use crate::function::BitFunction::{self, Flip, Identity, Reset0, Reset1};
use crate::scalar::Scalar;

/// `(α, β, γ)`; `α` is absent iff `β = 0`, `γ` is absent iff `β = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitParams<T> {
    pub alpha: Option<T>,
    pub beta: T,
    pub gamma: Option<T>,
}

fn in_unit_interval<T: Scalar>(v: &T) -> bool {
    !v.is_negative() && *v <= T::one()
}

fn in_signed_interval<T: Scalar>(v: &T) -> bool {
    v.abs() <= T::one()
}

impl<T: Scalar> BitParams<T> {
    pub fn new(alpha: Option<T>, beta: T, gamma: Option<T>) -> Result<Self> {
        if !in_unit_interval(&beta) {
            return Err(Error::InvalidParameter(format!(
                "beta = {beta} outside [0, 1]"
            )));
        }
        match (&alpha, beta.is_zero()) {
            (Some(_), true) => {
                return Err(Error::InvalidParameter(
                    "alpha must be absent when beta = 0".into(),
                ))
            }
            (None, false) => {
                return Err(Error::InvalidParameter(
                    "alpha is required when beta > 0".into(),
                ))
            }
            (Some(a), false) if !in_signed_interval(a) => {
                return Err(Error::InvalidParameter(format!(
                    "alpha = {a} outside [-1, 1]"
                )))
            }
            _ => {}
        }
        match (&gamma, beta.is_one()) {
            (Some(_), true) => {
                return Err(Error::InvalidParameter(
                    "gamma must be absent when beta = 1".into(),
                ))
            }
            (None, false) => {
                return Err(Error::InvalidParameter(
                    "gamma is required when beta < 1".into(),
                ))
            }
            (Some(g), false) if !in_signed_interval(g) => {
                return Err(Error::InvalidParameter(format!(
                    "gamma = {g} outside [-1, 1]"
                )))
            }
            _ => {}
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Fills in whichever of `α`, `γ` the value of `β` requires, ignoring the other.
    pub fn with_defaults(alpha: T, beta: T, gamma: T) -> Result<Self> {
        let a = (!beta.is_zero()).then_some(alpha);
        let g = (!beta.is_one()).then_some(gamma);
        Self::new(a, beta, g)
    }

    /// Weights on `I`, `F`, `R₀`, `R₁`.
    pub fn weights(&self) -> [(BitFunction, T); 4] {
        let half = T::half();
        let one = T::one();
        let a = self.alpha.clone().unwrap_or_else(T::zero);
        let g = self.gamma.clone().unwrap_or_else(T::zero);
        let b = self.beta.clone();
        let nb = one.clone() - b.clone();
        [
            (
                Identity,
                b.clone() * (one.clone() - a.clone()) * half.clone(),
            ),
            (Flip, b * (one.clone() + a) * half.clone()),
            (
                Reset0,
                nb.clone() * (one.clone() - g.clone()) * half.clone(),
            ),
            (Reset1, nb * (one + g) * half),
        ]
    }

    pub fn to_distribution(&self) -> FunctionDistribution<T> {
        FunctionDistribution::from_bits(self.weights())
            .expect("valid parameters give a distribution")
    }

    fn reflect(&self, flip_alpha: bool, flip_gamma: bool) -> Self {
        let neg = |v: &Option<T>, flip: bool| v.clone().map(|x| if flip { -x } else { x });
        Self {
            alpha: neg(&self.alpha, flip_alpha),
            beta: self.beta.clone(),
            gamma: neg(&self.gamma, flip_gamma),
        }
    }
}

pub fn parametrize<T: Scalar>(p: &FunctionDistribution<T>) -> Result<BitParams<T>> {
    p.require_bits()?;
    let [i, f, r0, r1] = BitFunction::ALL.map(|b| p.bit_weight(b));
    let beta = i.clone() + f.clone();
    let rest = T::one() - beta.clone();
    let alpha = (!beta.is_zero()).then(|| (f - i) / beta.clone());
    let gamma = (!rest.is_zero()).then(|| (r1 - r0) / rest);
    Ok(BitParams { alpha, beta, gamma })
}

/// `(M_β, M_|α|, M_{|γ|,β})`; `M_|α|` is absent exactly on free resources.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneTriple<T> {
    pub m_beta: T,
    pub m_abs_alpha: Option<T>,
    pub m_gamma_beta: T,
}

impl<T: Scalar> MonotoneTriple<T> {
    /// Componentwise domination, with free targets below everything.
    pub fn dominates(&self, other: &Self) -> bool {
        match (&self.m_abs_alpha, &other.m_abs_alpha) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => {
                self.m_beta >= other.m_beta && a >= b && self.m_gamma_beta >= other.m_gamma_beta
            }
        }
    }
}

/// `β / (1 − |γ|(1−β))`, `1` at `β = 1` and `0` at `β = 0`.
pub fn gamma_beta_monotone<T: Scalar>(params: &BitParams<T>) -> T {
    let b = &params.beta;
    if b.is_zero() {
        return T::zero();
    }
    match &params.gamma {
        None => T::one(),
        Some(g) => b.clone() / (T::one() - g.abs() * (T::one() - b.clone())),
    }
}

pub fn monotone_triple<T: Scalar>(p: &FunctionDistribution<T>) -> Result<MonotoneTriple<T>> {
    let params = parametrize(p)?;
    Ok(MonotoneTriple {
        m_gamma_beta: gamma_beta_monotone(&params),
        m_abs_alpha: params.alpha.as_ref().map(Signed::abs),
        m_beta: params.beta,
    })
}

/// `(|α|, β, |γ|)`: one representative per equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm<T> {
    pub abs_alpha: Option<T>,
    pub beta: T,
    pub abs_gamma: Option<T>,
}

impl<T: Scalar> CanonicalForm<T> {
    /// The representative with nonnegative `α` and `γ`.
    pub fn representative(&self) -> FunctionDistribution<T> {
        BitParams {
            alpha: self.abs_alpha.clone(),
            beta: self.beta.clone(),
            gamma: self.abs_gamma.clone(),
        }
        .to_distribution()
    }
}

pub fn canonical_form<T: Scalar>(p: &FunctionDistribution<T>) -> Result<CanonicalForm<T>> {
    let params = parametrize(p)?;
    Ok(CanonicalForm {
        abs_alpha: params.alpha.map(|a| a.abs()),
        beta: params.beta,
        abs_gamma: params.gamma.map(|g| g.abs()),
    })
}

/// Convertibility decided by the three monotones.
pub fn bit_convertible_fast<T: Scalar>(
    p: &FunctionDistribution<T>,
    q: &FunctionDistribution<T>,
) -> Result<bool> {
    Ok(monotone_triple(p)?.dominates(&monotone_triple(q)?))
}

/// Extremal points of the downward closure: the resource itself, both
/// resets, and its three reflections, with coincident points removed.
/// A free resource reaches the whole free edge, so only the resets remain.
pub fn table1_vertices<T: Scalar>(
    p: &FunctionDistribution<T>,
) -> Result<Vec<FunctionDistribution<T>>> {
    let params = parametrize(p)?;
    let resets = [
        FunctionDistribution::point(Reset0.function()),
        FunctionDistribution::point(Reset1.function()),
    ];
    if params.beta.is_zero() {
        return Ok(resets.to_vec());
    }
    let [r0, r1] = resets;
    let candidates = [
        params.to_distribution(),
        r0,
        r1,
        params.reflect(true, false).to_distribution(),
        params.reflect(true, true).to_distribution(),
        params.reflect(false, true).to_distribution(),
    ];
    let mut out: Vec<FunctionDistribution<T>> = Vec::new();
    for c in candidates {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Vertex of the regular tetrahedron assigned to each bit function.
pub fn tetra_vertex<T: Scalar>(b: BitFunction) -> [T; 3] {
    let signs: [i64; 3] = match b {
        Identity => [1, 1, 1],
        Flip => [1, -1, -1],
        Reset0 => [-1, 1, -1],
        Reset1 => [-1, -1, 1],
    };
    signs.map(|s| T::ratio(s, 1))
}

/// Barycentric position of the resource in the tetrahedron.
pub fn tetra_coords<T: Scalar>(p: &FunctionDistribution<T>) -> Result<[T; 3]> {
    p.require_bits()?;
    let mut out = [T::zero(), T::zero(), T::zero()];
    for b in BitFunction::ALL {
        let w = p.bit_weight(b);
        for (o, v) in out.iter_mut().zip(tetra_vertex::<T>(b)) {
            *o = o.clone() + w.clone() * v;
        }
    }
    Ok(out)
}
