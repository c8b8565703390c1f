//! Ground field: arbitrary-precision rationals.
//!
//! `BigRational` keeps every value reduced to lowest terms with a positive
//! denominator, which is exactly the invariant we need; no wrapper is
//! required.

use num::BigInt;
pub use num::BigRational as Scalar;
use num_traits::{One, Zero};

/// The rational `n/d`. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a scalar.
pub fn qi(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `1/n!` as an exact rational.
pub fn inv_factorial(n: u32) -> Scalar {
    let mut f = BigInt::from(1);
    for k in 2..=n as u64 {
        f *= k;
    }
    Scalar::new(BigInt::from(1), f)
}
