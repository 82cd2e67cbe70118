//! Binomial coefficients with the conventions used throughout the crate:
//! `C(y, x) = 0` whenever `x < 0`, `y < 0` or `x > y`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

pub fn binomial(y: i64, x: i64) -> BigUint {
    if x < 0 || y < 0 || x > y {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(y as u64), BigUint::from(x as u64))
}

/// Signed variant, convenient inside alternating sums.
pub fn binomial_signed(y: i64, x: i64) -> BigInt {
    BigInt::from(binomial(y, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn conventions() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(4, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_rule() {
        for y in 1..40 {
            for x in 1..=y {
                assert_eq!(binomial(y, x), binomial(y - 1, x - 1) + binomial(y - 1, x));
            }
        }
    }
}
