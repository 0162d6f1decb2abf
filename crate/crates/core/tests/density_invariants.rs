//! Density against direct counting on the seeded set of small automata.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use regmeasure::automata::Dfa;
use regmeasure::density::natural_density;
use regmeasure::random::{random_dfas, DEFAULT_SEED};
use regmeasure::Alphabet;

const MACHINES: usize = 200;
const MAX_STATES: usize = 8;
const CESARO_N: usize = 200;
const RESIDUE_N: usize = 60;

fn tolerance_cesaro() -> BigRational {
    BigRational::new(1.into(), 20.into())
}

fn tolerance_residue() -> BigRational {
    BigRational::new(1.into(), 1024.into())
}

/// Exact accepted-word counts for lengths `0..=len`, by dynamic
/// programming over path counts.
fn counts(dfa: &Dfa, len: usize) -> Vec<BigUint> {
    let mut paths = vec![BigUint::zero(); dfa.num_states()];
    paths[dfa.initial()] = 1u8.into();
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..=len {
        out.push(
            (0..paths.len())
                .filter(|&q| dfa.is_accepting(q))
                .map(|q| paths[q].clone())
                .sum(),
        );
        let mut next = vec![BigUint::zero(); paths.len()];
        for (p, c) in paths.iter().enumerate() {
            for &r in dfa.successors(p) {
                next[r] += c;
            }
        }
        paths = next;
    }
    out
}

fn ratio(count: &BigUint, n: usize) -> BigRational {
    BigRational::new(
        BigInt::from(count.clone()),
        BigInt::from(num_traits::pow(BigUint::from(2u8), n)),
    )
}

#[test]
fn cesaro_and_residue_limits_match_counting() {
    let machines = random_dfas(
        DEFAULT_SEED,
        &Alphabet::parse("ab").unwrap(),
        MACHINES,
        MAX_STATES,
    );
    for (i, x) in machines.iter().enumerate() {
        let report = natural_density(x).unwrap();
        let c = report.modulus;
        let counts = counts(x, (CESARO_N - 1).max(RESIDUE_N + c));

        let mean = (0..CESARO_N)
            .map(|n| ratio(&counts[n], n))
            .sum::<BigRational>()
            / BigRational::from_integer(CESARO_N.into());
        assert!(
            (&mean - &report.density).abs() <= tolerance_cesaro(),
            "machine {i}: Cesàro mean {mean} vs density {}",
            report.density
        );

        for (r, limit) in &report.accumulation_points {
            let n = (RESIDUE_N..RESIDUE_N + c).find(|n| n % c == *r).unwrap();
            let off = (ratio(&counts[n], n) - limit).abs();
            assert!(
                off <= tolerance_residue(),
                "machine {i}: residue {r} at n={n} is {off} from {limit}"
            );
        }
    }
}
