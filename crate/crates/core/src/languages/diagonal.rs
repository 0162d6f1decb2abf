//! The diagonal language: a recursive, null language that escapes every
//! co-infinite regular language.
//!
//! Automata are enumerated in a pinned order. For `s = 1, 2, …` every
//! `s`-state DFA with initial state 0 is encoded as the byte string
//!
//! ```text
//! accepting[0] … accepting[s-1]  delta[0][0] … delta[0][k-1]  …  delta[s-1][k-1]
//! ```
//!
//! (flags are 0 or 1, targets are state numbers), and machines with `s`
//! states come in lexicographic order of that string. Shorter encodings
//! come first, so the order is shortlex on encodings.
//!
//! Program P scans this list keeping a length bound `ℓ`, starting at 0. A
//! co-finite machine is skipped. A co-infinite machine yields `u`, the
//! shortlex-least rejected word longer than `ℓ`: the input is accepted
//! when it equals `u`, rejected when it is shortlex-smaller than `u`, and
//! otherwise the scan continues with `ℓ = |u|`. The words `u` form a fixed
//! sequence of strictly increasing lengths, which is memoized here.

use std::sync::Mutex;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::word::{shortlex_cmp, Alphabet, Letter, Word};

pub const DEFAULT_MAX_WORD_LENGTH: usize = 32;
pub const DEFAULT_MAX_AUTOMATA: u64 = 1 << 24;

/// Number of `s`-state machines over `k` letters, if it fits.
fn machines_with(states: usize, k: usize) -> Option<u64> {
    let flags = 1u64.checked_shl(states as u32)?;
    let table = (states as u64).checked_pow((states * k) as u32)?;
    flags.checked_mul(table)
}

/// The `index`-th machine among those with `states` states.
pub fn pinned_automaton_with(alphabet: &Alphabet, states: usize, mut index: u64) -> Result<Dfa> {
    let k = alphabet.len();
    let total = machines_with(states, k)
        .ok_or_else(|| Error::InvalidParameter("enumeration block too large".into()))?;
    if states == 0 || index >= total {
        return Err(Error::InvalidParameter(format!(
            "no machine {index} with {states} states"
        )));
    }
    // least significant digit last
    let mut delta = vec![0usize; states * k];
    for slot in delta.iter_mut().rev() {
        *slot = (index % states as u64) as usize;
        index /= states as u64;
    }
    let mut accepting = vec![false; states];
    for flag in accepting.iter_mut().rev() {
        *flag = index % 2 == 1;
        index /= 2;
    }
    let table = delta.chunks(k).map(<[usize]>::to_vec).collect();
    Dfa::new(
        alphabet.clone(),
        table,
        0,
        (0..states).filter(|&q| accepting[q]),
    )
}

/// The `i`-th machine in the global enumeration.
pub fn pinned_automaton(alphabet: &Alphabet, mut i: u64) -> Result<Dfa> {
    for states in 1.. {
        let block = machines_with(states, alphabet.len())
            .ok_or_else(|| Error::InvalidParameter("enumeration index too large".into()))?;
        if i < block {
            return pinned_automaton_with(alphabet, states, i);
        }
        i -= block;
    }
    unreachable!()
}

/// One witness produced by program P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalWitness {
    /// Position of the co-infinite machine in the enumeration.
    pub machine: u64,
    /// Shortlex-least word rejected by that machine and longer than the
    /// previous witness.
    pub word: Word,
}

#[derive(Debug, Default)]
struct Progress {
    states: usize,
    offset: u64,
    examined: u64,
    witnesses: Vec<DiagonalWitness>,
}

/// Program P over a fixed alphabet, with memoized witnesses.
#[derive(Debug)]
pub struct DiagonalProgram {
    alphabet: Alphabet,
    max_word_length: usize,
    max_automata: u64,
    progress: Mutex<Progress>,
}

impl DiagonalProgram {
    pub fn new(alphabet: Alphabet) -> Result<Self> {
        Self::with_budget(alphabet, DEFAULT_MAX_WORD_LENGTH, DEFAULT_MAX_AUTOMATA)
    }

    pub fn with_budget(
        alphabet: Alphabet,
        max_word_length: usize,
        max_automata: u64,
    ) -> Result<Self> {
        if alphabet.len() < 2 {
            return Err(Error::InvalidParameter(
                "the diagonal language needs at least two letters".into(),
            ));
        }
        Ok(DiagonalProgram {
            alphabet,
            max_word_length,
            max_automata,
            progress: Mutex::new(Progress {
                states: 1,
                ..Progress::default()
            }),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Extends the memo until the last witness is longer than `len`.
    fn extend_past(&self, progress: &mut Progress, len: usize) -> Result<()> {
        let k = self.alphabet.len();
        while progress
            .witnesses
            .last()
            .is_none_or(|w| w.word.len() <= len)
        {
            let ell = progress.witnesses.last().map_or(0, |w| w.word.len());
            if ell >= self.max_word_length {
                return Err(Error::budget(
                    "diagonal word length",
                    ell as u128 + 1,
                    self.max_word_length as u128,
                ));
            }
            if progress.examined >= self.max_automata {
                return Err(Error::budget(
                    "diagonal automata examined",
                    progress.examined as u128 + 1,
                    self.max_automata as u128,
                ));
            }
            let block = machines_with(progress.states, k).ok_or_else(|| {
                Error::budget("diagonal enumeration", u128::MAX, u64::MAX as u128)
            })?;
            if progress.offset >= block {
                progress.states += 1;
                progress.offset = 0;
                continue;
            }
            let machine = progress.examined;
            let dfa = pinned_automaton_with(&self.alphabet, progress.states, progress.offset)?;
            progress.offset += 1;
            progress.examined += 1;
            if !dfa.is_coinfinite() {
                continue;
            }
            let word = dfa.complement().shortlex_least_member(ell).ok_or_else(|| {
                Error::Internal("co-infinite machine without long non-member".into())
            })?;
            progress.witnesses.push(DiagonalWitness { machine, word });
        }
        Ok(())
    }

    /// Runs program P on `w`.
    pub fn accepts(&self, w: &[Letter]) -> Result<bool> {
        let mut progress = self.progress.lock().expect("diagonal cache poisoned");
        self.extend_past(&mut progress, w.len())?;
        for witness in &progress.witnesses {
            match shortlex_cmp(w, witness.word.letters()) {
                std::cmp::Ordering::Equal => return Ok(true),
                std::cmp::Ordering::Less => return Ok(false),
                std::cmp::Ordering::Greater => {}
            }
        }
        Err(Error::Internal("witness sequence ended early".into()))
    }

    /// Every witness of length at most `len`, in order.
    pub fn witnesses_up_to(&self, len: usize) -> Result<Vec<DiagonalWitness>> {
        let mut progress = self.progress.lock().expect("diagonal cache poisoned");
        self.extend_past(&mut progress, len)?;
        Ok(progress
            .witnesses
            .iter()
            .take_while(|w| w.word.len() <= len)
            .cloned()
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn enumeration_starts_with_one_state_machines() {
        let a = ab();
        let first = pinned_automaton(&a, 0).unwrap();
        assert!(first.is_empty());
        let second = pinned_automaton(&a, 1).unwrap();
        assert!(!second.is_coinfinite());
        // first two-state machine: nothing accepting, all edges to 0
        let third = pinned_automaton(&a, 2).unwrap();
        assert_eq!(third.num_states(), 2);
        assert!(third.is_empty());
        // last two-state machine: both accepting, all edges to 1
        let last = pinned_automaton(&a, 2 + 64 - 1).unwrap();
        assert!(last.accepting_states().count() == 2 && last.step(0, 0) == 1);
    }

    #[test]
    fn empty_word_is_rejected() {
        let p = DiagonalProgram::new(ab()).unwrap();
        assert!(!p.accepts(&[]).unwrap());
    }

    #[test]
    fn first_witness_escapes_first_coinfinite_machine() {
        let a = ab();
        let p = DiagonalProgram::new(a.clone()).unwrap();
        let first = p.witnesses_up_to(1).unwrap().remove(0);
        assert_eq!(first.machine, 0);
        assert_eq!(a.render(first.word.letters()), "a");
        assert!(!pinned_automaton(&a, first.machine)
            .unwrap()
            .accepts(first.word.letters()));
    }

    #[test]
    fn at_most_one_word_per_length() {
        let p = DiagonalProgram::new(ab()).unwrap();
        let ws = p.witnesses_up_to(6).unwrap();
        assert!(ws.windows(2).all(|w| w[0].word.len() < w[1].word.len()));
        for w in &ws {
            assert!(p.accepts(w.word.letters()).unwrap());
        }
    }

    #[test]
    fn budget_is_reported() {
        let p = DiagonalProgram::with_budget(ab(), 2, 1 << 20).unwrap();
        assert!(matches!(
            p.accepts(&[0; 5]),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(DiagonalProgram::new(Alphabet::parse("a").unwrap()).is_err());
    }
}
