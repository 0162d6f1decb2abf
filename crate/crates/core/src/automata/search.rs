//! Shortlex witnesses: least members, forbidden words and prefixes,
//! finiteness tests.

use std::collections::HashSet;

use super::{Dfa, Nfa, State, DEFAULT_SUBSET_BUDGET};
use crate::error::Result;
use crate::graph::strongly_connected_components;
use crate::word::{Letter, Word};

impl Dfa {
    /// Shortlex-least accepted word of length strictly greater than
    /// `longer_than`.
    pub fn shortlex_least_member(&self, longer_than: usize) -> Option<Word> {
        self.least_member_from(longer_than + 1)
    }

    /// Shortlex-least accepted word, the empty word included.
    pub fn shortlex_least(&self) -> Option<Word> {
        self.least_member_from(0)
    }

    fn least_member_from(&self, min_len: usize) -> Option<Word> {
        let len = self.least_accepted_length(min_len)?;
        Some(self.least_word_of_length(len))
    }

    /// Least `n ≥ min_len` such that some word of length `n` is accepted.
    fn least_accepted_length(&self, min_len: usize) -> Option<usize> {
        let n = self.num_states();
        let mut current = vec![false; n];
        current[self.initial] = true;
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        for len in 0.. {
            if len >= min_len {
                if current.iter().zip(&self.accepting).any(|(&c, &f)| c && f) {
                    return Some(len);
                }
                // The reachable-set sequence is eventually periodic; a repeat
                // among lengths ≥ min_len means a full period was checked.
                if !seen.insert(current.clone()) {
                    return None;
                }
            }
            let mut next = vec![false; n];
            for q in (0..n).filter(|&q| current[q]) {
                for &t in self.successors(q) {
                    next[t] = true;
                }
            }
            current = next;
        }
        unreachable!()
    }

    fn least_word_of_length(&self, len: usize) -> Word {
        let n = self.num_states();
        // can_finish[r][q]: some word of length r leads q into acceptance
        let mut can_finish = vec![self.accepting.clone()];
        for r in 1..=len {
            let prev = &can_finish[r - 1];
            let row = (0..n)
                .map(|q| self.successors(q).iter().any(|&t| prev[t]))
                .collect();
            can_finish.push(row);
        }
        let mut q = self.initial;
        let mut word = Vec::with_capacity(len);
        for pos in 0..len {
            let rest = &can_finish[len - pos - 1];
            let a = (0..self.alphabet.len())
                .find(|&a| rest[self.step(q, a as Letter)])
                .expect("length was checked to be feasible");
            word.push(a as Letter);
            q = self.step(q, a as Letter);
        }
        Word(word)
    }

    /// Reachable and co-accessible states.
    pub fn useful_states(&self) -> Vec<bool> {
        let reach = self.reachable();
        let co = self.coaccessible();
        reach.iter().zip(&co).map(|(&r, &c)| r && c).collect()
    }

    /// Shortest, then shortlex-least, `w` with `L ∩ A*wA* = ∅`; `None` when
    /// the language is dense.
    pub fn shortest_forbidden_word(&self) -> Result<Option<Word>> {
        let useful = self.useful_states();
        let mut factors = Nfa::new(self.alphabet.clone(), self.num_states() + 1);
        let start = self.num_states();
        factors.add_initial(start);
        for q in (0..self.num_states()).filter(|&q| useful[q]) {
            factors.add_epsilon(start, q);
            factors.set_accepting(q);
            for a in self.alphabet.letters() {
                let t = self.step(q, a);
                if useful[t] {
                    factors.add_edge(q, a, t);
                }
            }
        }
        let factor_dfa = factors.determinize(DEFAULT_SUBSET_BUDGET)?;
        Ok(factor_dfa.complement().shortlex_least())
    }

    /// Shortest, then shortlex-least, `w` with `L ∩ wA* = ∅`.
    pub fn shortest_forbidden_prefix(&self) -> Option<Word> {
        let co = self.coaccessible();
        let prefixes = Dfa {
            accepting: co.iter().map(|&c| !c).collect(),
            ..self.clone()
        };
        prefixes.shortlex_least()
    }

    /// True iff infinitely many words are accepted.
    pub fn language_infinite(&self) -> bool {
        let useful = self.useful_states();
        let adjacency: Vec<Vec<State>> = (0..self.num_states())
            .map(|q| {
                if useful[q] {
                    self.successors(q)
                        .iter()
                        .copied()
                        .filter(|&t| useful[t])
                        .collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        strongly_connected_components(&adjacency)
            .iter()
            .any(|c| c.len() > 1 || (useful[c[0]] && adjacency[c[0]].contains(&c[0])))
    }

    /// True iff the complement is infinite.
    pub fn is_coinfinite(&self) -> bool {
        self.complement().language_infinite()
    }
}

#[cfg(test)]
mod tests {
    use crate::automata::Dfa;
    use crate::word::{Alphabet, Word};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn render(a: &Alphabet, w: Option<Word>) -> Option<String> {
        w.map(|w| a.render(w.letters()))
    }

    fn a_star() -> Dfa {
        Dfa::new(ab(), vec![vec![0, 1], vec![1, 1]], 0, [0]).unwrap()
    }

    fn starts_with(letter: usize) -> Dfa {
        let mut first = vec![2, 2];
        first[letter] = 1;
        Dfa::new(ab(), vec![first, vec![1, 1], vec![2, 2]], 0, [1]).unwrap()
    }

    #[test]
    fn least_member_respects_length_bound() {
        let all = Dfa::trivial(ab(), true);
        assert_eq!(
            render(&ab(), all.shortlex_least_member(2)),
            Some("aaa".into())
        );
        assert_eq!(
            render(&ab(), starts_with(1).shortlex_least_member(0)),
            Some("b".into())
        );
        assert_eq!(Dfa::trivial(ab(), false).shortlex_least_member(3), None);
    }

    #[test]
    fn least_member_of_finite_language_runs_out() {
        // exactly {a}
        let d = Dfa::new(ab(), vec![vec![1, 2], vec![2, 2], vec![2, 2]], 0, [1]).unwrap();
        assert_eq!(render(&ab(), d.shortlex_least_member(0)), Some("a".into()));
        assert_eq!(d.shortlex_least_member(1), None);
    }

    #[test]
    fn least_member_with_periodic_lengths() {
        // lengths ≡ 2 mod 3
        let d = Dfa::new(ab(), vec![vec![1, 1], vec![2, 2], vec![0, 0]], 0, [2]).unwrap();
        assert_eq!(
            render(&ab(), d.shortlex_least_member(6)),
            Some("aaaaaaaa".into())
        );
    }

    #[test]
    fn forbidden_word_of_a_star_is_b() {
        assert_eq!(
            render(&ab(), a_star().shortest_forbidden_word().unwrap()),
            Some("b".into())
        );
    }

    #[test]
    fn universal_language_is_dense() {
        assert_eq!(
            Dfa::trivial(ab(), true).shortest_forbidden_word().unwrap(),
            None
        );
    }

    #[test]
    fn empty_language_forbids_the_empty_word() {
        assert_eq!(
            Dfa::trivial(ab(), false).shortest_forbidden_word().unwrap(),
            Some(Word::empty())
        );
    }

    #[test]
    fn forbidden_prefix_of_starts_with_a() {
        assert_eq!(
            render(&ab(), starts_with(0).shortest_forbidden_prefix()),
            Some("b".into())
        );
        assert_eq!(Dfa::trivial(ab(), true).shortest_forbidden_prefix(), None);
    }

    #[test]
    fn finiteness() {
        let all = Dfa::trivial(ab(), true);
        assert!(all.language_infinite());
        assert!(!all.is_coinfinite());

        let eps = Dfa::new(ab(), vec![vec![1, 1], vec![1, 1]], 0, [0]).unwrap();
        assert!(!eps.language_infinite());
        assert!(eps.is_coinfinite());

        let evens = Dfa::new(ab(), vec![vec![1, 1], vec![0, 0]], 0, [0]).unwrap();
        assert!(evens.language_infinite());
        assert!(evens.is_coinfinite());
    }
}
