//! Exact integers and rationals.
//!
//! Counts are [`BigCount`] (arbitrary-precision unsigned) and every density
//! is a [`Rational`] in lowest terms with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type BigCount = BigUint;
pub type Rational = BigRational;

/// `base^exp` as a big integer.
pub fn big_pow(base: usize, exp: usize) -> BigCount {
    num_traits::pow(BigUint::from(base), exp)
}

/// `num / den` for non-negative integers. Panics if `den` is zero.
pub fn ratio(num: &BigCount, den: &BigCount) -> Rational {
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `1 / base^exp`.
pub fn inverse_power(base: usize, exp: usize) -> Rational {
    ratio(&BigUint::one(), &big_pow(base, exp))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_canonical_fractions() {
        assert_eq!(render(&rational(2, 4)), "1/2");
        assert_eq!(render(&rational(4, 2)), "2");
        assert_eq!(render(&zero()), "0");
        assert_eq!(render(&rational(-3, 9)), "-1/3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 10), BigUint::from(184_756u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
    }
}
