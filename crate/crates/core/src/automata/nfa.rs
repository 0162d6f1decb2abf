use std::collections::HashMap;

use super::{Dfa, State};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter};

/// Cap on the number of subsets materialized by [`Nfa::determinize`].
pub const DEFAULT_SUBSET_BUDGET: usize = 1 << 20;

/// Nondeterministic automaton with optional ε-edges.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    // edges[q][a] = targets
    edges: Vec<Vec<Vec<State>>>,
    epsilon: Vec<Vec<State>>,
    initial: Vec<State>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            edges: vec![vec![Vec::new(); k]; states],
            epsilon: vec![Vec::new(); states],
            initial: Vec::new(),
            accepting: vec![false; states],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn add_state(&mut self) -> State {
        self.edges.push(vec![Vec::new(); self.alphabet.len()]);
        self.epsilon.push(Vec::new());
        self.accepting.push(false);
        self.accepting.len() - 1
    }

    pub fn add_edge(&mut self, from: State, letter: Letter, to: State) {
        self.edges[from][letter as usize].push(to);
    }

    pub fn add_epsilon(&mut self, from: State, to: State) {
        self.epsilon[from].push(to);
    }

    pub fn add_initial(&mut self, q: State) {
        self.initial.push(q);
    }

    pub fn set_accepting(&mut self, q: State) {
        self.accepting[q] = true;
    }

    fn check(&self) -> Result<()> {
        let n = self.num_states();
        let in_range = |q: &State| *q < n;
        let ok = self.initial.iter().all(in_range)
            && self.epsilon.iter().flatten().all(in_range)
            && self.edges.iter().flatten().flatten().all(in_range);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidAutomaton(
                "NFA references a missing state".into(),
            ))
        }
    }

    fn closure(&self, set: &mut Vec<State>) {
        let mut seen = vec![false; self.num_states()];
        for &q in set.iter() {
            seen[q] = true;
        }
        let mut i = 0;
        while i < set.len() {
            let q = set[i];
            for &t in &self.epsilon[q] {
                if !seen[t] {
                    seen[t] = true;
                    set.push(t);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        set.dedup();
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        let mut current = self.initial.clone();
        self.closure(&mut current);
        for &a in word {
            let mut next: Vec<State> = current
                .iter()
                .flat_map(|&q| self.edges[q][a as usize].iter().copied())
                .collect();
            self.closure(&mut next);
            current = next;
        }
        current.iter().any(|&q| self.accepting[q])
    }

    /// Subset construction. The result is total: the empty subset becomes
    /// a rejecting sink when it is reachable.
    pub fn determinize(&self, budget: usize) -> Result<Dfa> {
        self.check()?;
        let k = self.alphabet.len();
        let mut start = self.initial.clone();
        self.closure(&mut start);
        let mut index: HashMap<Vec<State>, State> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut subsets = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for a in 0..k {
                let mut next: Vec<State> = subsets[i]
                    .iter()
                    .flat_map(|&q| self.edges[q][a].iter().copied())
                    .collect();
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= budget {
                            return Err(Error::budget(
                                "subset construction",
                                subsets.len() as u128 + 1,
                                budget as u128,
                            ));
                        }
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }
}
