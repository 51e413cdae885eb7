//! Exact scalar abstraction.
//!
//! Every probability, parameter and monotone in this crate is carried by a
//! type implementing [`Scalar`]. The bound asks for an ordered field with
//! exact arithmetic: comparisons feed boundary-sensitive decisions, so the
//! floating-point types deliberately do not qualify (`f64` is not `Ord`).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed};

/// An exact ordered field.
///
/// Blanket-implemented; [`num_rational::BigRational`] and
/// [`num_rational::Rational64`] both qualify.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar")
    }

    /// `num / den` for small integer literals.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("numerator representable")
            / Self::from_i64(den).expect("denominator representable")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
}

pub(crate) fn sum<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc + v.clone())
}
