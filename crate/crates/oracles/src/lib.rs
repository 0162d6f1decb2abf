//! Brute-force reference oracles.
//!
//! Everything here is computed from definitions: explicit word
//! enumeration, direct predicates, binomial sums and floating-point
//! state-vector iteration. Nothing calls the library's counters or density
//! engine, so agreement with them is independent evidence.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use regmeasure::automata::Dfa;
use regmeasure::Letter;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn big_q(n: &BigUint, d: &BigUint) -> Q {
    Q::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

pub fn pow(b: u32, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(b), e)
}

pub fn choose(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// All words of length `n` over `k` letters, last letter varying fastest.
pub fn words(k: usize, n: usize) -> impl Iterator<Item = Vec<Letter>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut i| {
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = (i % k as u64) as Letter;
            i /= k as u64;
        }
        w
    })
}

pub fn words_up_to(k: usize, n: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0..=n).flat_map(move |m| words(k, m))
}

pub fn count(w: &[Letter], x: Letter) -> usize {
    w.iter().filter(|&&y| y == x).count()
}

/// Per-length acceptance ratios by pushing a probability vector through
/// the transition table.
pub fn ratios_f64(dfa: &Dfa, len: usize) -> Vec<f64> {
    let k = dfa.alphabet().len() as f64;
    let mut v = vec![0.0; dfa.num_states()];
    v[dfa.initial()] = 1.0;
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..=len {
        out.push(
            (0..v.len())
                .filter(|&q| dfa.is_accepting(q))
                .map(|q| v[q])
                .sum(),
        );
        let mut next = vec![0.0; v.len()];
        for (p, mass) in v.iter().enumerate() {
            for &r in dfa.successors(p) {
                next[r] += mass / k;
            }
        }
        v = next;
    }
    out
}

/// Cesàro mean of the ratios at lengths `0..n`.
pub fn cesaro_f64(dfa: &Dfa, n: usize) -> f64 {
    ratios_f64(dfa, n - 1).iter().sum::<f64>() / n as f64
}

pub fn is_semi_dyck(w: &[Letter]) -> bool {
    let mut depth: i64 = 0;
    for &x in w {
        depth += if x == 0 { 1 } else { -1 };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

/// `a^{n_1} b ⋯ a^{n_p} b` with some `n_i ≠ i`.
pub fn is_goldstine(w: &[Letter]) -> bool {
    if w.last() != Some(&1) {
        return false;
    }
    let mut run = 0;
    let mut block = 1;
    for &x in w {
        if x == 0 {
            run += 1;
        } else {
            if run != block {
                return true;
            }
            run = 0;
            block += 1;
        }
    }
    false
}

/// Words over `{a,b,c}` of length `n` with `|w|_a = |w|_b` or `|w|_a = |w|_c`.
pub fn o3_count(n: usize) -> BigUint {
    let multinomial = |i: usize, j: usize| choose(n, i) * choose(n - i, j);
    let mut total = BigUint::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            let l = n - i - j;
            if i == j || i == l {
                total += multinomial(i, j);
            }
        }
    }
    total
}

/// Some proper divisor period reproduces the word.
pub fn is_power(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).any(|p| n.is_multiple_of(p) && w.chunks(p).all(|c| c == &w[..p]))
}

pub fn mobius(n: usize) -> i64 {
    let (mut m, mut d, mut sign) = (n, 2, 1);
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration_is_complete_and_ordered() {
        let all: Vec<_> = words(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(words_up_to(3, 3).count(), 1 + 3 + 9 + 27);
    }

    #[test]
    fn binomials_and_mobius() {
        assert_eq!(choose(20, 10), BigUint::from(184_756u32));
        assert_eq!(choose(3, 5), BigUint::zero());
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn o3_count_matches_enumeration() {
        for n in 0..=7 {
            let brute = words(3, n)
                .filter(|w| count(w, 0) == count(w, 1) || count(w, 0) == count(w, 2))
                .count();
            assert_eq!(o3_count(n), BigUint::from(brute));
        }
    }

    #[test]
    fn predicates_on_small_words() {
        assert!(is_semi_dyck(&[0, 0, 1, 1]) && !is_semi_dyck(&[1, 0]));
        assert!(!is_goldstine(&[0, 1, 0, 0, 1]) && is_goldstine(&[1]) && !is_goldstine(&[0, 1, 0]));
        assert!(is_power(&[0, 1, 0, 1]) && !is_power(&[0, 1, 1]) && !is_power(&[0]));
    }
}
