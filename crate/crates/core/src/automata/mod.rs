//! Total deterministic automata and the operations the density engine and
//! the approximation families are built from.

mod builders;
mod minimize;
mod nfa;
mod search;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::census::{Language, LengthCensus};
use crate::error::{Error, Result};
use crate::numbers::BigCount;
use crate::word::{Alphabet, Letter};

pub use builders::{builtin, mod_counter_dfa, pattern_occurrence_dfa};
pub use nfa::{Nfa, DEFAULT_SUBSET_BUDGET};

pub type State = usize;

/// Total DFA. `delta` is stored row-major: `delta[q * |A| + a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<State>,
    initial: State,
    accepting: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

impl BoolOp {
    fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Intersection => x && y,
            BoolOp::Difference => x && !y,
        }
    }
}

impl Dfa {
    /// Builds a DFA from a per-state transition table.
    pub fn new(
        alphabet: Alphabet,
        table: Vec<Vec<State>>,
        initial: State,
        accepting: impl IntoIterator<Item = State>,
    ) -> Result<Self> {
        let k = alphabet.len();
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        let mut delta = Vec::with_capacity(n * k);
        for (q, row) in table.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            delta.extend(row);
        }
        let mut flags = vec![false; n];
        for f in accepting {
            *flags.get_mut(f).ok_or_else(|| {
                Error::InvalidAutomaton(format!("accepting state {f} out of range"))
            })? = true;
        }
        Self::from_parts(alphabet, delta, initial, flags)
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<State>,
        initial: State,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 || delta.len() != n * alphabet.len() {
            return Err(Error::InvalidAutomaton(
                "transition table has the wrong shape".into(),
            ));
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        if let Some(&t) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::InvalidAutomaton(format!(
                "transition target {t} out of range"
            )));
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        })
    }

    /// One-state automaton accepting `A*` or `∅`.
    pub fn trivial(alphabet: Alphabet, accept_all: bool) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            delta: vec![0; k],
            initial: 0,
            accepting: vec![accept_all],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = State> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(q, _)| q)
    }

    #[inline]
    pub fn step(&self, q: State, a: Letter) -> State {
        self.delta[q * self.alphabet.len() + a as usize]
    }

    pub fn successors(&self, q: State) -> &[State] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    pub fn run_from(&self, q: State, word: &[Letter]) -> State {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn run(&self, word: &[Letter]) -> State {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        self.accepting[self.run(word)]
    }

    /// Same automaton started in `q`.
    pub fn with_initial(&self, q: State) -> Dfa {
        assert!(q < self.num_states(), "state {q} out of range");
        Dfa {
            initial: q,
            ..self.clone()
        }
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    /// Product automaton restricted to reachable pairs.
    pub fn combine(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let k = self.alphabet.len();
        let mut index: HashMap<(State, State), State> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for a in 0..k as Letter {
                let next = (self.step(p, a), other.step(q, a));
                let len = pairs.len();
                let id = *index.entry(next).or_insert_with(|| len);
                if id == len {
                    pairs.push(next);
                }
                delta.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op.apply(self.accepting[p], other.accepting[q]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.combine(other, BoolOp::Union)
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa> {
        self.combine(other, BoolOp::Intersection)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        self.combine(other, BoolOp::Difference)
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for &t in self.successors(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); n];
        for q in 0..n {
            for &t in self.successors(q) {
                preds[t].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut queue: VecDeque<State> = self.accepting_states().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !self.accepting_states().any(|q| reach[q])
    }

    pub fn is_subset_of(&self, other: &Dfa) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Reversal as an NFA: edges flipped, accepting states become initial.
    pub fn reverse(&self) -> Nfa {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut nfa = Nfa::new(self.alphabet.clone(), n);
        for q in 0..n {
            for a in 0..k as Letter {
                nfa.add_edge(self.step(q, a), a, q);
            }
        }
        for f in self.accepting_states() {
            nfa.add_initial(f);
        }
        nfa.set_accepting(self.initial);
        nfa
    }

    /// Letter-count matrix between states.
    pub fn transfer_matrix(&self) -> TransferMatrix {
        let n = self.num_states();
        let mut entries = vec![vec![BigCount::default(); n]; n];
        for (p, row) in entries.iter_mut().enumerate() {
            for &q in self.successors(p) {
                row[q] += 1u32;
            }
        }
        TransferMatrix { entries }
    }

    /// Exact number of accepted words of each length `0..=max_len`, by
    /// propagating path counts one letter at a time (a sparse product with
    /// the transfer matrix).
    pub fn count_words(&self, max_len: usize) -> LengthCensus {
        let n = self.num_states();
        let mut paths = vec![BigCount::default(); n];
        paths[self.initial] = BigCount::from(1u32);
        let mut counts = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            counts.push(self.accepting_states().map(|q| &paths[q]).sum::<BigCount>());
            if len == max_len {
                break;
            }
            let mut next = vec![BigCount::default(); n];
            for (p, c) in paths.iter().enumerate() {
                if c.bits() == 0 {
                    continue;
                }
                for &q in self.successors(p) {
                    next[q] += c;
                }
            }
            paths = next;
        }
        LengthCensus::new(self.alphabet.len(), counts).expect("path counts are bounded by |A|^n")
    }

    pub fn to_document(&self) -> DfaDocument {
        DfaDocument {
            alphabet: self
                .alphabet
                .symbols()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            states: self.num_states(),
            initial: self.initial,
            accepting: self.accepting_states().collect(),
            delta: (0..self.num_states())
                .map(|q| self.successors(q).to_vec())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let doc: DfaDocument = serde_json::from_str(text).map_err(|e| {
            Error::Document(format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        doc.try_into()
    }
}

impl Language for Dfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn member(&self, word: &[Letter]) -> Result<bool> {
        if let Some(&bad) = word.iter().find(|&&a| a as usize >= self.alphabet.len()) {
            return Err(Error::InvalidParameter(format!(
                "letter index {bad} out of range"
            )));
        }
        Ok(self.accepts(word))
    }
}

/// JSON interchange form of a [`Dfa`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaDocument {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub delta: Vec<Vec<usize>>,
}

impl TryFrom<DfaDocument> for Dfa {
    type Error = Error;

    fn try_from(doc: DfaDocument) -> Result<Dfa> {
        let mut symbols = Vec::with_capacity(doc.alphabet.len());
        for s in &doc.alphabet {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => symbols.push(c),
                _ => {
                    return Err(Error::Document(format!(
                        "alphabet entry {s:?} is not a single character"
                    )))
                }
            }
        }
        let alphabet = Alphabet::new(symbols).map_err(|e| Error::Document(e.to_string()))?;
        if doc.delta.len() != doc.states {
            return Err(Error::Document(format!(
                "delta has {} rows but states = {}",
                doc.delta.len(),
                doc.states
            )));
        }
        Dfa::new(alphabet, doc.delta, doc.initial, doc.accepting)
            .map_err(|e| Error::Document(e.to_string()))
    }
}

/// Square matrix whose `(p, q)` entry counts the letters moving `p` to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: Vec<Vec<BigCount>>,
}

impl TransferMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, p: State, q: State) -> &BigCount {
        &self.entries[p][q]
    }

    pub fn row_sum(&self, p: State) -> BigCount {
        self.entries[p].iter().sum()
    }

    /// `e_from · M^n · 1_targets` for `n = 0..=max_len`, by dense
    /// vector-matrix products.
    pub fn path_counts(&self, from: State, targets: &[bool], max_len: usize) -> Vec<BigCount> {
        let n = self.dim();
        let mut v = vec![BigCount::default(); n];
        v[from] = BigCount::from(1u32);
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push((0..n).filter(|&q| targets[q]).map(|q| &v[q]).sum());
            if len == max_len {
                break;
            }
            v = (0..n)
                .map(|q| (0..n).map(|p| &v[p] * &self.entries[p][q]).sum())
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census_by_enumeration;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn evens() -> Dfa {
        Dfa::new(ab(), vec![vec![1, 1], vec![0, 0]], 0, [0]).unwrap()
    }

    fn starts_with_a() -> Dfa {
        Dfa::new(ab(), vec![vec![1, 2], vec![1, 1], vec![2, 2]], 0, [1]).unwrap()
    }

    #[test]
    fn rejects_partial_tables() {
        assert!(Dfa::new(ab(), vec![vec![0]], 0, []).is_err());
        assert!(Dfa::new(ab(), vec![vec![0, 1]], 0, []).is_err());
        assert!(Dfa::new(ab(), vec![vec![0, 0]], 1, []).is_err());
        assert!(Dfa::new(ab(), vec![vec![0, 0]], 0, [3]).is_err());
    }

    #[test]
    fn counts_match_closed_forms() {
        let c = starts_with_a().count_words(5);
        assert_eq!(c.counts()[3], BigCount::from(4u32));
        let e = evens().count_words(4);
        assert_eq!(e.counts()[4], BigCount::from(16u32));
        assert_eq!(e.counts()[3], BigCount::default());
    }

    #[test]
    fn transfer_rows_sum_to_alphabet_size() {
        let m = starts_with_a().transfer_matrix();
        for p in 0..m.dim() {
            assert_eq!(m.row_sum(p), BigCount::from(2u32));
        }
    }

    #[test]
    fn transfer_matrix_route_agrees_with_sparse_route() {
        let d = starts_with_a().union(&evens()).unwrap();
        let targets: Vec<bool> = (0..d.num_states()).map(|q| d.is_accepting(q)).collect();
        let dense = d.transfer_matrix().path_counts(d.initial(), &targets, 9);
        assert_eq!(dense, d.count_words(9).counts());
    }

    #[test]
    fn complement_of_intersection_with_complement_is_empty() {
        let x = starts_with_a();
        assert!(x.intersection(&x.complement()).unwrap().is_empty());
    }

    #[test]
    fn union_and_intersection_counts_add_up() {
        let (x, y) = (starts_with_a(), evens());
        let u = x.union(&y).unwrap().count_words(8);
        let i = x.intersection(&y).unwrap().count_words(8);
        let (cx, cy) = (x.count_words(8), y.count_words(8));
        for n in 0..=8 {
            assert_eq!(
                &u.counts()[n] + &i.counts()[n],
                &cx.counts()[n] + &cy.counts()[n]
            );
        }
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let other = Dfa::trivial(Alphabet::parse("abc").unwrap(), true);
        assert!(matches!(
            evens().union(&other),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn count_words_agrees_with_enumeration() {
        let d = starts_with_a().difference(&evens()).unwrap();
        assert_eq!(
            d.count_words(8),
            census_by_enumeration(&d, 8, 1 << 20).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let d = starts_with_a();
        assert_eq!(Dfa::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn json_errors_carry_location() {
        let err = Dfa::from_json("{\n \"alphabet\": [\"a\"],\n \"states\": oops }").unwrap_err();
        match err {
            Error::Document(msg) => assert!(msg.starts_with("line 3"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let err = Dfa::from_json(
            r#"{"alphabet":["ab"],"states":1,"initial":0,"accepting":[],"delta":[[0]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Document(_)));
    }

    #[test]
    fn reversal_accepts_mirror_words() {
        let d = starts_with_a()
            .reverse()
            .determinize(DEFAULT_SUBSET_BUDGET)
            .unwrap();
        let a = ab();
        assert!(d.accepts(a.word("bba").unwrap().letters()));
        assert!(!d.accepts(a.word("abb").unwrap().letters()));
    }
}
