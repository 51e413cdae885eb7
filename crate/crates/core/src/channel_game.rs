//! Guessing games, postselected causal connection and the average causal effect.

use crate::bit2bit::parametrize;
use crate::distribution::FunctionDistribution;
use crate::error::{Error, Result};
use crate::function::BitFunction::{Flip, Identity, Reset0, Reset1};
use crate::scalar::{sum, Scalar};
use crate::stochastic::StochasticMap;

/// A probability vector over the channel input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Prior<T> {
    weights: Vec<T>,
}

impl<T: Scalar> Prior<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(w.to_string()));
        }
        let total: T = sum(&weights);
        if !total.is_one() {
            return Err(Error::NonNormalized(total.to_string()));
        }
        Ok(Self { weights })
    }

    pub fn uniform(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self {
            weights: vec![T::one() / T::from_count(size); size],
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    fn check(&self, domain: usize) -> Result<()> {
        if self.len() != domain {
            return Err(Error::size(format!(
                "prior over {} inputs for a channel with {domain} inputs",
                self.len()
            )));
        }
        Ok(())
    }
}

/// MAP success probability `Σ_y max_x S(y|x)·prior(x)`.
pub fn guessing_probability<T: Scalar>(p: &FunctionDistribution<T>, prior: &Prior<T>) -> Result<T> {
    prior.check(p.domain_size())?;
    let s = p.to_stochastic();
    Ok(s.rows().iter().fold(T::zero(), |acc, row| {
        let best = row
            .iter()
            .zip(prior.weights())
            .map(|(s, q)| s.clone() * q.clone())
            .max()
            .expect("nonempty input alphabet");
        acc + best
    }))
}

/// Joint weight of each bit function with output `y`, under the prior.
fn joint_with_output<T: Scalar>(p: &FunctionDistribution<T>, y: usize, prior: &Prior<T>) -> (T, T) {
    let mut connected = T::zero();
    let mut marginal = T::zero();
    for b in [Identity, Flip, Reset0, Reset1] {
        let weight = p.bit_weight(b);
        for (x, q) in prior.weights().iter().enumerate() {
            if b.table()[x] == y {
                let w = weight.clone() * q.clone();
                if b.is_connected() {
                    connected = connected + w.clone();
                }
                marginal = marginal + w;
            }
        }
    }
    (connected, marginal)
}

/// Posterior weight on `{I, F}` after observing output `y`.
pub fn posterior_causal_connection<T: Scalar>(
    p: &FunctionDistribution<T>,
    y: usize,
    prior: &Prior<T>,
) -> Result<T> {
    p.require_bits()?;
    prior.check(2)?;
    if y > 1 {
        return Err(Error::InvalidParameter(format!("output {y} is not a bit")));
    }
    let (connected, marginal) = joint_with_output(p, y, prior);
    if marginal.is_zero() {
        return Err(Error::ZeroMarginal(y));
    }
    Ok(connected / marginal)
}

/// Largest posterior on `{I, F}` over outputs with positive marginal, uniform prior.
pub fn max_postselected_connection<T: Scalar>(p: &FunctionDistribution<T>) -> Result<T> {
    p.require_bits()?;
    let prior = Prior::uniform(2)?;
    let mut best = None::<T>;
    for y in 0..2 {
        match posterior_causal_connection(p, y, &prior) {
            Ok(v) => best = Some(best.map_or(v.clone(), |b| b.max(v))),
            Err(Error::ZeroMarginal(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(best.expect("some output has positive marginal"))
}

fn require_bit_channel<T: Scalar>(s: &StochasticMap<T>) -> Result<()> {
    if s.input_size() != 2 || s.output_size() != 2 {
        return Err(Error::size(format!(
            "expected a 2x2 channel, got {} inputs and {} outputs",
            s.input_size(),
            s.output_size()
        )));
    }
    Ok(())
}

/// `S(1|1) − S(1|0)`.
pub fn ace<T: Scalar>(s: &StochasticMap<T>) -> Result<T> {
    require_bit_channel(s)?;
    Ok(s.get(1, 1).clone() - s.get(1, 0).clone())
}

/// `P(I) − P(F)`.
pub fn ace_dist<T: Scalar>(p: &FunctionDistribution<T>) -> Result<T> {
    p.require_bits()?;
    Ok(p.bit_weight(Identity) - p.bit_weight(Flip))
}

/// The least causal weight `M_β` among distributions inducing `s`, with a
/// distribution attaining it.
pub fn min_beta_over_preimage<T: Scalar>(
    s: &StochasticMap<T>,
) -> Result<(T, FunctionDistribution<T>)> {
    let effect = ace(s)?;
    let a = s.get(1, 1).clone();
    let b = s.get(1, 0).clone();
    let one = T::one();
    let entries = if effect.is_negative() {
        [
            (Flip, b.clone() - a.clone()),
            (Reset1, a.clone()),
            (Reset0, one - b),
        ]
    } else {
        [(Identity, effect.clone()), (Reset1, b), (Reset0, one - a)]
    };
    let witness = FunctionDistribution::from_bits(entries)?;
    debug_assert_eq!(&witness.to_stochastic(), s);
    debug_assert_eq!(
        parametrize(&witness).map(|p| p.beta).as_ref(),
        Ok(&effect.abs())
    );
    Ok((effect.abs(), witness))
}
