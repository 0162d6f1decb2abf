//! Reproducible pseudo-random automata.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::Dfa;
use crate::density::{density, UniformChain};
use crate::error::Result;
use crate::word::Alphabet;

/// Seed shared by every pseudo-random test set.
pub const DEFAULT_SEED: u64 = 0x5EED_D0C5;

/// Between 1 and `max_states` states, uniform transitions, each state
/// accepting with probability 1/2.
pub fn random_dfa<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states.max(1));
    let table = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet.clone(), table, rng.gen_range(0..n), accepting)
        .expect("generated table is well formed")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_dfas(seed: u64, alphabet: &Alphabet, count: usize, max_states: usize) -> Vec<Dfa> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_dfa(&mut rng, alphabet, max_states))
        .collect()
}

/// The first `count` sampled automata with positive density.
pub fn random_nonnull_dfas(
    seed: u64,
    alphabet: &Alphabet,
    count: usize,
    max_states: usize,
) -> Result<Vec<Dfa>> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = random_dfa(&mut rng, alphabet, max_states);
        if !density(&d)?.is_zero() {
            out.push(d);
        }
    }
    Ok(out)
}

/// Non-empty null automata: a sampled transition structure accepting only
/// at transient states.
pub fn random_null_dfas(
    seed: u64,
    alphabet: &Alphabet,
    count: usize,
    max_states: usize,
) -> Result<Vec<Dfa>> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let shape = random_dfa(&mut rng, alphabet, max_states.max(2)).canonical();
        let chain = UniformChain::new(&shape);
        let recurrent: Vec<usize> = chain
            .recurrent_classes()?
            .into_iter()
            .flat_map(|c| c.states)
            .collect();
        let transient: Vec<usize> = (0..shape.num_states())
            .filter(|q| !recurrent.contains(q))
            .collect();
        if transient.is_empty() {
            continue;
        }
        let accepting: Vec<usize> = transient
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if accepting.is_empty() {
            continue;
        }
        let table = (0..shape.num_states())
            .map(|q| shape.successors(q).to_vec())
            .collect();
        out.push(Dfa::new(
            alphabet.clone(),
            table,
            shape.initial(),
            accepting,
        )?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_reproducible() {
        let a = Alphabet::parse("ab").unwrap();
        assert_eq!(random_dfas(7, &a, 20, 8), random_dfas(7, &a, 20, 8));
        assert!(random_dfas(7, &a, 50, 8)
            .iter()
            .all(|d| d.num_states() <= 8));
    }

    #[test]
    fn null_and_nonnull_sets() {
        let a = Alphabet::parse("ab").unwrap();
        for d in random_null_dfas(DEFAULT_SEED, &a, 5, 6).unwrap() {
            assert!(density(&d).unwrap().is_zero());
            assert!(!d.is_empty());
        }
        for d in random_nonnull_dfas(DEFAULT_SEED, &a, 5, 6).unwrap() {
            assert!(!density(&d).unwrap().is_zero());
        }
    }
}
