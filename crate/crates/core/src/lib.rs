//! Exact resource theories of causal influence.
//!
//! Resources are probability distributions over functions `X -> Y` with
//! exact rational weights. The crate decides convertibility under local
//! processing ([`rtcaus`]) and common-cause combs ([`rtknowcaus`]), computes
//! the bit-to-bit monotones ([`bit2bit`]), image-size spectra
//! ([`beta_spectrum`]) and channel-game quantities ([`channel_game`]), and
//! ships a command-line front end ([`cli`]).
//!
//! Algorithms are generic over an exact ordered field ([`Scalar`]); the
//! aliases at the crate root fix it to arbitrary-precision rationals.

pub mod beta_spectrum;
pub mod bit2bit;
pub mod channel_game;
pub mod cli;
pub mod distribution;
pub mod error;
pub mod function;
pub mod hull;
pub mod rtcaus;
pub mod rtknowcaus;
pub mod scalar;
pub mod stochastic;

pub use distribution::{compose_distributions, to_stochastic, FunctionDistribution};
pub use error::{Error, Result};
pub use function::{compose_functions, image_size, BitFunction, FiniteFunction};
pub use rtknowcaus::{
    CombMixture, CombSignature, ConversionVerdict, Converter, ExtremalComb, HasseGraph,
};
pub use scalar::Scalar;
pub use stochastic::{canonical_preimage, StochasticMap};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rational for small, overflow-free computations.
pub type Rational64 = num_rational::Rational64;

pub type Distribution = FunctionDistribution<Rational>;
pub type Channel = StochasticMap<Rational>;
pub type Mixture = CombMixture<Rational>;
pub type Verdict = ConversionVerdict<Rational>;
pub type Params = bit2bit::BitParams<Rational>;
pub type Monotones = bit2bit::MonotoneTriple<Rational>;
pub type Canonical = bit2bit::CanonicalForm<Rational>;
pub type Spectrum = beta_spectrum::BetaSpectrum<Rational>;
pub type UniformPrior = channel_game::Prior<Rational>;
