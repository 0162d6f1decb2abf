//! Closed-form length counts, independent of membership enumeration.

use num_traits::{One, Zero};

use crate::numbers::{big_pow, binomial, BigCount};

pub fn catalan(m: usize) -> BigCount {
    binomial(2 * m, m) / BigCount::from(m + 1)
}

/// Semi-Dyck words of length `n`: `Catalan(n/2)` for even `n`.
pub fn semi_dyck(n: usize) -> BigCount {
    if n.is_multiple_of(2) {
        catalan(n / 2)
    } else {
        BigCount::zero()
    }
}

/// Words of length `n` over `k` letters with `|w|_a = |w|_b`.
pub fn count_eq(k: usize, n: usize) -> BigCount {
    (0..=n / 2)
        .map(|j| binomial(n, 2 * j) * binomial(2 * j, j) * big_pow(k - 2, n - 2 * j))
        .sum()
}

pub fn palindromes(k: usize, n: usize) -> BigCount {
    big_pow(k, n.div_ceil(2))
}

fn factorial(n: usize) -> BigCount {
    (1..=n).map(BigCount::from).product()
}

/// `n! / (parts[0]! ⋯ parts[r]!)`; the parts sum to `n`.
fn multinomial(parts: &[usize]) -> BigCount {
    let n: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// `|w|_a = |w|_b` or `|w|_a = |w|_c` over `{a, b, c}`.
pub fn o3(n: usize) -> BigCount {
    let both = if n.is_multiple_of(3) {
        multinomial(&[n / 3; 3])
    } else {
        BigCount::zero()
    };
    count_eq(3, n) * 2u32 - both
}

/// `|w|_x = |w|_x̄` or `|w|_y = |w|_ȳ` over four letters.
pub fn o4(n: usize) -> BigCount {
    let both: BigCount = if n.is_multiple_of(2) {
        (0..=n / 2)
            .map(|i| multinomial(&[i, i, n / 2 - i, n / 2 - i]))
            .sum()
    } else {
        BigCount::zero()
    };
    count_eq(4, n) * 2u32 - both
}

/// `|w|_a > m·|w|_b` over `{a, b}`.
pub fn majority(m: usize, n: usize) -> BigCount {
    (0..=n)
        .filter(|&b| n - b > m * b)
        .map(|b| binomial(n, b))
        .sum()
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Primitive words of length `n ≥ 1`: `Σ_{d | n} μ(d)·k^{n/d}`.
pub fn primitive(k: usize, n: usize) -> BigCount {
    if n == 0 {
        return BigCount::zero();
    }
    let mut plus = BigCount::zero();
    let mut minus = BigCount::zero();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match mobius(d) {
            1 => plus += big_pow(k, n / d),
            -1 => minus += big_pow(k, n / d),
            _ => {}
        }
    }
    plus - minus
}

/// Coprefix language of an infinite word: all but one word per length.
pub fn coprefix(k: usize, n: usize) -> BigCount {
    big_pow(k, n) - BigCount::one()
}

/// Goldstine words of length `n`: words ending in `b` that are not a
/// prefix of `a b a² b a³ b ⋯`.
pub fn goldstine(n: usize, prefix_ends_in_b: bool) -> BigCount {
    if n == 0 {
        return BigCount::zero();
    }
    let ending_in_b = big_pow(2, n - 1);
    if prefix_ends_in_b {
        ending_in_b - BigCount::one()
    } else {
        ending_in_b
    }
}

/// Words `u c v` of length `n` over `k` letters, `u` in a base language
/// with length counts `base`, `v` arbitrary.
pub fn suffix_extension(base: &[BigCount], k: usize, n: usize) -> BigCount {
    (0..n).map(|m| &base[m] * big_pow(k, n - m - 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<BigCount> = (0..8).map(catalan).collect();
        let expected: Vec<BigCount> = [1u32, 1, 2, 5, 14, 42, 132, 429]
            .into_iter()
            .map(BigCount::from)
            .collect();
        assert_eq!(c, expected);
        assert_eq!(semi_dyck(6), 5u32.into());
        assert_eq!(semi_dyck(7), 0u32.into());
    }

    #[test]
    fn primitive_six() {
        assert_eq!(primitive(2, 6), 54u32.into());
        assert_eq!(primitive(2, 1), 2u32.into());
        assert_eq!(primitive(2, 0), 0u32.into());
    }

    #[test]
    fn majority_three() {
        assert_eq!(majority(1, 3), 4u32.into());
        assert_eq!(majority(1, 0), 0u32.into());
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn small_o3() {
        // n = 1: only c (a = b) and b (a = c)
        assert_eq!(o3(1), 2u32.into());
        assert_eq!(o3(0), 1u32.into());
    }
}
