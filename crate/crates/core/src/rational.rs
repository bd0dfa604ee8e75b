//! Exact rational numbers.

use num_bigint::BigInt;
use num_traits::One;

/// Arbitrary precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// `base^exp` by repeated squaring.
pub fn pow(base: &Rational, mut exp: u32) -> Rational {
    let mut result = Rational::one();
    let mut square = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &square;
        }
        exp >>= 1;
        if exp > 0 {
            square = &square * &square;
        }
    }
    result
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}
