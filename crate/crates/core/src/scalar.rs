//! Exact scalar types used for root coordinates and polynomial coefficients.
//!
//! Everything numeric in this crate is exact. Root construction only needs
//! ring operations (the number fields are presented by monic integer
//! polynomials), so any exact commutative ring with a conversion from small
//! integers works: `i64`, [`Rational`], [`BigRational`], `BigInt`.

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// An exact commutative ring usable as a coefficient type.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Eq + Hash + Debug + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("small integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Eq + Hash + Debug + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Rational};

    fn sum_to<T: Scalar>(n: i64) -> T {
        (1..=n).fold(T::zero(), |acc, k| acc + T::from_int(k))
    }

    #[test]
    fn scalar_types_agree_on_small_sums() {
        assert_eq!(sum_to::<i64>(10), 55);
        assert_eq!(sum_to::<Rational>(10), Rational::from_integer(55));
        assert_eq!(sum_to::<BigRational>(10), BigRational::from_integer(55.into()));
    }
}
