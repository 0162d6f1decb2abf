//! Hopcroft partition refinement followed by canonical BFS numbering, so
//! that two automata for the same language minimize to structurally equal
//! values.

use std::collections::VecDeque;

use super::{Dfa, State};
use crate::word::Letter;

impl Dfa {
    /// Drops unreachable states and renumbers the rest in BFS order from
    /// the initial state, exploring letters in alphabet order.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut order = vec![usize::MAX; self.num_states()];
        let mut states = vec![self.initial];
        order[self.initial] = 0;
        let mut i = 0;
        while i < states.len() {
            for &t in self.successors(states[i]) {
                if order[t] == usize::MAX {
                    order[t] = states.len();
                    states.push(t);
                }
            }
            i += 1;
        }
        let mut delta = Vec::with_capacity(states.len() * k);
        for &q in &states {
            delta.extend(self.successors(q).iter().map(|&t| order[t]));
        }
        let accepting = states.iter().map(|&q| self.accepting[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            accepting,
        }
    }

    /// The unique minimal automaton for the same language, canonically
    /// numbered.
    pub fn minimize(&self) -> Dfa {
        let dfa = self.canonical();
        let n = dfa.num_states();
        let k = dfa.alphabet.len();

        let mut inverse: Vec<Vec<Vec<State>>> = vec![vec![Vec::new(); n]; k];
        for q in 0..n {
            for a in 0..k {
                inverse[a][dfa.step(q, a as Letter)].push(q);
            }
        }

        let finals: Vec<State> = (0..n).filter(|&q| dfa.accepting[q]).collect();
        let others: Vec<State> = (0..n).filter(|&q| !dfa.accepting[q]).collect();
        let mut blocks: Vec<Vec<State>> = Vec::new();
        let mut block_of = vec![0; n];
        for part in [finals, others] {
            if !part.is_empty() {
                for &q in &part {
                    block_of[q] = blocks.len();
                }
                blocks.push(part);
            }
        }

        let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
        let mut worklist: VecDeque<(usize, usize)> = VecDeque::new();
        if blocks.len() == 2 {
            let smaller = if blocks[0].len() <= blocks[1].len() {
                0
            } else {
                1
            };
            worklist.extend((0..k).map(|a| (smaller, a)));
            pending[smaller].fill(true);
        }

        let mut marked = vec![false; n];
        let mut touched_count = vec![0usize; 0];
        while let Some((splitter, a)) = worklist.pop_front() {
            pending[splitter][a] = false;
            let mut preimage: Vec<State> = Vec::new();
            for &q in &blocks[splitter] {
                for &p in &inverse[a][q] {
                    if !marked[p] {
                        marked[p] = true;
                        preimage.push(p);
                    }
                }
            }
            touched_count.resize(blocks.len(), 0);
            let mut touched: Vec<usize> = Vec::new();
            for &p in &preimage {
                let b = block_of[p];
                if touched_count[b] == 0 {
                    touched.push(b);
                }
                touched_count[b] += 1;
            }
            for b in touched {
                let hits = std::mem::take(&mut touched_count[b]);
                if hits == blocks[b].len() {
                    continue;
                }
                let (inside, outside): (Vec<State>, Vec<State>) =
                    blocks[b].iter().partition(|&&q| marked[q]);
                let new_id = blocks.len();
                for &q in &inside {
                    block_of[q] = new_id;
                }
                blocks[b] = outside;
                blocks.push(inside);
                pending.push(vec![false; k]);
                #[allow(clippy::needless_range_loop)]
                for c in 0..k {
                    let target = if pending[b][c] || blocks[new_id].len() <= blocks[b].len() {
                        new_id
                    } else {
                        b
                    };
                    if !pending[target][c] {
                        pending[target][c] = true;
                        worklist.push_back((target, c));
                    }
                }
            }
            for p in preimage {
                marked[p] = false;
            }
        }

        let mut delta = Vec::with_capacity(blocks.len() * k);
        for block in &blocks {
            let rep = block[0];
            delta.extend(dfa.successors(rep).iter().map(|&t| block_of[t]));
        }
        let accepting = blocks.iter().map(|b| dfa.accepting[b[0]]).collect();
        Dfa {
            alphabet: dfa.alphabet.clone(),
            delta,
            initial: block_of[dfa.initial],
            accepting,
        }
        .canonical()
    }
}

#[cfg(test)]
mod tests {
    use crate::automata::Dfa;
    use crate::word::{words_up_to, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn even_length_needs_two_states() {
        // four states tracking length mod 4, accepting 0 and 2
        let d = Dfa::new(
            ab(),
            vec![vec![1, 1], vec![2, 2], vec![3, 3], vec![0, 0]],
            0,
            [0, 2],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.num_states(), 2);
        assert!(m.equivalent(&d).unwrap());
    }

    #[test]
    fn double_complement_minimizes_to_same_value() {
        let d = Dfa::new(ab(), vec![vec![1, 2], vec![1, 1], vec![2, 2]], 0, [1]).unwrap();
        assert_eq!(d.complement().complement().minimize(), d.minimize());
    }

    #[test]
    fn minimize_is_idempotent_and_language_preserving() {
        let d = Dfa::new(
            ab(),
            vec![
                vec![1, 3],
                vec![2, 0],
                vec![2, 4],
                vec![4, 1],
                vec![0, 4],
                vec![5, 5],
            ],
            0,
            [2, 4],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.minimize(), m);
        assert_eq!(m.count_words(10), d.count_words(10));
        for w in words_up_to(2, 8) {
            assert_eq!(m.accepts(w.letters()), d.accepts(w.letters()));
        }
    }

    #[test]
    fn empty_language_minimizes_to_one_state() {
        let d = Dfa::new(ab(), vec![vec![1, 0], vec![0, 1]], 0, []).unwrap();
        assert_eq!(d.minimize(), Dfa::trivial(ab(), false));
    }
}
