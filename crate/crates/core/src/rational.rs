//! Exact rationals and conversion of rational term lists to integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::system::lcm_all;

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// `num / den` as a reduced rational. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Multiplies every value by the lcm of all denominators, giving integers.
///
/// The multiplier is positive, so signs are preserved.
pub fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let l = lcm_all(values.iter().map(|v| v.denom()));
    values.iter().map(|v| (v * &l).to_integer()).collect()
}

/// `max(|numerator|, denominator)`, the naive height of a rational.
pub fn naive_height(q: &Rational) -> BigInt {
    q.numer().abs().max(q.denom().clone())
}
