//! Transition monoids of minimal automata, Green's relations, and the
//! witnesses extracted from them.
//!
//! An element is the map `q ↦ q·w` induced by a word `w` on the states of
//! the minimal DFA. Products read left to right: `(e·f)(q) = f(e(q))`, so
//! `η(uv) = η(u)·η(v)`. Elements are discovered by breadth-first search
//! from the identity along right multiplication by letters, which assigns
//! each element its shortlex-least representative word.
//!
//! The monoid stores its right Cayley graph and a hash index of maps
//! instead of a full multiplication table; any product is one map
//! composition and one lookup.

mod green;
mod witness;

use std::collections::HashMap;

pub use green::GreenClasses;
pub use witness::{idempotent_power, jclass_language_density, nonprimitive_witness};

use crate::automata::{Dfa, State};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

pub const DEFAULT_MONOID_BUDGET: usize = 50_000;

/// Index of a monoid element.
pub type Element = usize;

#[derive(Clone, Debug)]
pub struct Monoid {
    dfa: Dfa,
    maps: Vec<Vec<State>>,
    index: HashMap<Vec<State>, Element>,
    // right[e * k + a] = e · η(a)
    right: Vec<Element>,
    witnesses: Vec<Word>,
}

/// Elements whose map sends the initial state to an accepting state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptSet {
    members: Vec<bool>,
}

impl AcceptSet {
    pub fn contains(&self, e: Element) -> bool {
        self.members[e]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(e, _)| e)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Transition monoid of the minimal automaton of `dfa`.
pub fn transition_monoid(dfa: &Dfa) -> Result<(Monoid, AcceptSet)> {
    transition_monoid_with_budget(dfa, DEFAULT_MONOID_BUDGET)
}

pub fn transition_monoid_with_budget(dfa: &Dfa, budget: usize) -> Result<(Monoid, AcceptSet)> {
    let dfa = dfa.minimize();
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let identity: Vec<State> = (0..n).collect();
    let mut index = HashMap::from([(identity.clone(), 0)]);
    let mut maps = vec![identity];
    let mut witnesses = vec![Word::empty()];
    let mut right = Vec::new();
    let mut e = 0;
    while e < maps.len() {
        for a in 0..k {
            let next: Vec<State> = maps[e].iter().map(|&q| dfa.step(q, a as Letter)).collect();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if maps.len() >= budget {
                        return Err(Error::budget(
                            "monoid elements",
                            maps.len() as u128 + 1,
                            budget as u128,
                        ));
                    }
                    let id = maps.len();
                    let mut word = witnesses[e].0.clone();
                    word.push(a as Letter);
                    index.insert(next.clone(), id);
                    maps.push(next);
                    witnesses.push(Word(word));
                    id
                }
            };
            right.push(id);
        }
        e += 1;
    }
    let members = maps
        .iter()
        .map(|m| dfa.is_accepting(m[dfa.initial()]))
        .collect();
    let monoid = Monoid {
        dfa,
        maps,
        index,
        right,
        witnesses,
    };
    Ok((monoid, AcceptSet { members }))
}

impl Monoid {
    /// The minimal automaton the monoid acts on.
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn identity(&self) -> Element {
        0
    }

    fn letters(&self) -> usize {
        self.dfa.alphabet().len()
    }

    pub fn map(&self, e: Element) -> &[State] {
        &self.maps[e]
    }

    /// `η(a)`.
    pub fn generator(&self, a: Letter) -> Element {
        self.right[a as usize]
    }

    /// `e · η(a)`.
    pub fn right_step(&self, e: Element, a: Letter) -> Element {
        self.right[e * self.letters() + a as usize]
    }

    /// `η(a) · e`.
    pub fn left_step(&self, e: Element, a: Letter) -> Element {
        self.compose(self.generator(a), e)
    }

    pub fn compose(&self, e: Element, f: Element) -> Element {
        let product: Vec<State> = self.maps[e].iter().map(|&q| self.maps[f][q]).collect();
        self.index[&product]
    }

    pub fn evaluate(&self, w: &[Letter]) -> Element {
        w.iter()
            .fold(self.identity(), |e, &a| self.right_step(e, a))
    }

    /// Shortlex-least word mapping to `e`.
    pub fn witness(&self, e: Element) -> &Word {
        &self.witnesses[e]
    }

    /// Largest shortest-representative length over all elements.
    pub fn max_witness_length(&self) -> usize {
        self.witnesses.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.compose(e, e) == e
    }

    /// Automaton over the elements: initial identity, `e →a e·η(a)`,
    /// accepting exactly `targets`.
    pub fn element_automaton(&self, targets: &[Element]) -> Result<Dfa> {
        let k = self.letters();
        let table = (0..self.len())
            .map(|e| self.right[e * k..(e + 1) * k].to_vec())
            .collect();
        Dfa::new(
            self.dfa.alphabet().clone(),
            table,
            0,
            targets.iter().copied(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{builtin, mod_counter_dfa};
    use crate::word::{words_up_to, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn even_length_monoid() {
        let (m, s) = transition_monoid(&builtin("evens", &ab()).unwrap()).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![m.identity()]);
    }

    #[test]
    fn trivial_monoid() {
        let (m, s) = transition_monoid(&builtin("all", &ab()).unwrap()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn mod_three_is_cyclic() {
        let (m, s) = transition_monoid(&mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap()).unwrap();
        assert_eq!(m.len(), 3);
        let g = m.generator(0);
        assert_eq!(m.compose(g, m.compose(g, g)), m.identity());
        assert_eq!(m.generator(1), m.compose(g, g));
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![g, m.generator(1)]);
    }

    #[test]
    fn accept_set_recognizes_language() {
        let d = Dfa::new(ab(), vec![vec![1, 2], vec![1, 0], vec![2, 2]], 0, [1]).unwrap();
        let (m, s) = transition_monoid(&d).unwrap();
        for w in words_up_to(2, 8) {
            assert_eq!(s.contains(m.evaluate(w.letters())), d.accepts(w.letters()));
        }
        for e in 0..m.len() {
            assert_eq!(m.evaluate(m.witness(e).letters()), e);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d = mod_counter_dfa(&ab(), 7, 'a', 'b', &[]).unwrap();
        assert!(matches!(
            transition_monoid_with_budget(&d, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
