//! Per-length word counts and their ratio/Cesàro sequences.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numbers::{big_pow, ratio, BigCount, Rational};
use crate::word::{checked_count, decode_word, Alphabet, Letter};

/// Default cap on `|A|^N` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 26;

/// Anything with a membership test over a fixed alphabet.
///
/// Membership may fail (for instance when a recursive oracle runs out of
/// budget); it never silently answers wrong.
pub trait Language: Sync {
    fn alphabet(&self) -> &Alphabet;
    fn member(&self, word: &[Letter]) -> Result<bool>;
}

/// Number of words of each length `0..=N` in some language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCensus {
    alphabet_size: usize,
    counts: Vec<BigCount>,
}

impl LengthCensus {
    pub fn new(alphabet_size: usize, counts: Vec<BigCount>) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::InvalidParameter(
                "alphabet size must be positive".into(),
            ));
        }
        for (n, c) in counts.iter().enumerate() {
            if *c > big_pow(alphabet_size, n) {
                return Err(Error::InvalidParameter(format!(
                    "count {c} at length {n} exceeds {alphabet_size}^{n}"
                )));
            }
        }
        Ok(LengthCensus {
            alphabet_size,
            counts,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    pub fn max_length(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// `counts[n] / |A|^n` for every `n`.
    pub fn ratios(&self) -> Vec<Rational> {
        self.counts
            .iter()
            .enumerate()
            .map(|(n, c)| ratio(c, &big_pow(self.alphabet_size, n)))
            .collect()
    }

    /// Ratios and Cesàro means. `cesaro[n] = (1/n) Σ_{k<n} ratios[k]` for
    /// `n ≥ 1`; `cesaro[0]` is undefined and reported as `None`.
    pub fn ratio_and_cesaro(&self) -> (Vec<Rational>, Vec<Option<Rational>>) {
        let ratios = self.ratios();
        let mut cesaro = Vec::with_capacity(ratios.len());
        cesaro.push(None);
        let mut sum = Rational::zero();
        for (k, r) in ratios
            .iter()
            .enumerate()
            .take(ratios.len().saturating_sub(1))
        {
            sum += r;
            cesaro.push(Some(&sum / Rational::from_integer((k as i64 + 1).into())));
        }
        (ratios, cesaro)
    }
}

/// Counts members of each length `0..=max_len` by testing every word.
///
/// Refuses to start when `|A|^max_len` exceeds `budget`.
pub fn census_by_enumeration<L: Language + ?Sized>(
    language: &L,
    max_len: usize,
    budget: u64,
) -> Result<LengthCensus> {
    let k = language.alphabet().len();
    let top = checked_count(k, max_len).unwrap_or(u64::MAX);
    if top > budget {
        let needed = (k as u128).checked_pow(max_len as u32).unwrap_or(u128::MAX);
        return Err(Error::budget("enumeration", needed, budget as u128));
    }
    let mut counts = Vec::with_capacity(max_len + 1);
    for n in 0..=max_len {
        counts.push(BigCount::from(count_length(language, n)?));
    }
    LengthCensus::new(k, counts)
}

fn count_length<L: Language + ?Sized>(language: &L, n: usize) -> Result<u64> {
    let k = language.alphabet().len();
    let total = checked_count(k, n).expect("bounded by the budget check");
    (0..total)
        .into_par_iter()
        .map_init(
            || vec![0 as Letter; n],
            |buf, i| {
                decode_word(k, i, buf);
                language.member(buf).map(u64::from)
            },
        )
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{one, rational, zero};

    fn census(k: usize, counts: &[u64]) -> LengthCensus {
        LengthCensus::new(k, counts.iter().map(|&c| BigCount::from(c)).collect()).unwrap()
    }

    #[test]
    fn even_lengths_alternate() {
        let c = census(2, &[1, 0, 4, 0, 16]);
        let (ratios, cesaro) = c.ratio_and_cesaro();
        assert_eq!(ratios, vec![one(), zero(), one(), zero(), one()]);
        assert_eq!(cesaro[4], Some(rational(1, 2)));
        assert_eq!(cesaro[0], None);
    }

    #[test]
    fn empty_language_is_all_zero() {
        let c = census(2, &[0, 0, 0, 0]);
        let (ratios, cesaro) = c.ratio_and_cesaro();
        assert!(ratios.iter().all(|r| r.is_zero()));
        assert!(cesaro.iter().flatten().all(|r| r.is_zero()));
    }

    #[test]
    fn starts_with_a_tends_to_half() {
        let counts: Vec<u64> = (0..12)
            .map(|n| if n == 0 { 0 } else { 1 << (n - 1) })
            .collect();
        let (ratios, cesaro) = census(2, &counts).ratio_and_cesaro();
        assert!(ratios[1..].iter().all(|r| *r == rational(1, 2)));
        // cesaro[n] = (n-1)/(2n)
        assert_eq!(cesaro[11], Some(rational(10, 22)));
    }

    #[test]
    fn rejects_impossible_counts() {
        assert!(LengthCensus::new(2, vec![BigCount::from(2u32)]).is_err());
    }
}
