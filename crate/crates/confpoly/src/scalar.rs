//! Scalar abstraction for all coefficient arithmetic.
//!
//! Every algebraic structure in the crate is generic over a [`Scalar`],
//! a field-like type with exact comparison. The blanket impl covers the
//! exact rationals the engine is built for as well as `f32`/`f64` and
//! machine-word rationals, so the core compiles against any of them.
//! Echelon ranks and membership tests are only meaningful for exact
//! scalars; the crate-root aliases pin `num_rational::BigRational`.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
}

/// Embeds a machine integer into the scalar type.
pub fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("machine integer embeds into any scalar")
}

/// The exact fraction `num/den` as a scalar.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    assert!(den != 0, "zero denominator");
    int::<T>(num) / int::<T>(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{One, Zero};

    #[test]
    fn rational_invariants_hold_after_arithmetic() {
        // denominator > 0, fraction reduced, zero is 0/1
        let a = ratio::<Rat>(4, -6);
        assert_eq!(a, ratio::<Rat>(-2, 3));
        assert!(a.denom().is_positive());
        assert_eq!(a, a.reduced());

        let z = a.clone() - a;
        assert!(z.is_zero());
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());

        let b = ratio::<Rat>(1, 2) + ratio::<Rat>(1, 2);
        assert!(b.is_one());
        assert!(b.denom().is_one());
    }

    #[test]
    fn embedding_works_for_floats_too() {
        assert_eq!(ratio::<f64>(1, 2), 0.5);
        assert_eq!(int::<f32>(-3), -3.0);
    }
}
