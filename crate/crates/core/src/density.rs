//! Exact density and natural density of regular languages.
//!
//! Reading a uniformly random letter at every step turns a DFA into a
//! Markov chain on its states, and `|L ∩ A^n| / |A^n|` is the probability
//! of sitting in an accepting state after `n` steps. The Cesàro limit of
//! that probability is obtained from the bottom strongly connected
//! components (the recurrent classes): each contributes its stationary
//! mass on accepting states, weighted by the probability of being absorbed
//! into it. The limits along residues modulo the lcm of the class periods
//! give the accumulation points of the plain sequence.
//!
//! Every linear system is solved exactly (see [`crate::linsolve`]).

use num_integer::Integer;
use num_traits::Zero;

use crate::automata::{Dfa, State};
use crate::error::Result;
use crate::graph::{component_ids, strongly_connected_components};
use crate::linsolve::solve;
use crate::numbers::{int, rational, Rational};

/// Uniform-letter Markov chain on the reachable states of a DFA.
#[derive(Clone, Debug)]
pub struct UniformChain {
    dfa: Dfa,
    // rows[p] = (q, number of letters moving p to q), targets distinct
    rows: Vec<Vec<(State, usize)>>,
}

impl UniformChain {
    /// Chain over the reachable part of `dfa`, states renumbered canonically.
    pub fn new(dfa: &Dfa) -> Self {
        let dfa = dfa.canonical();
        let rows = (0..dfa.num_states())
            .map(|p| {
                let mut row: Vec<(State, usize)> = Vec::new();
                for &q in dfa.successors(p) {
                    match row.iter_mut().find(|(t, _)| *t == q) {
                        Some(entry) => entry.1 += 1,
                        None => row.push((q, 1)),
                    }
                }
                row.sort_unstable();
                row
            })
            .collect();
        UniformChain { dfa, rows }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn num_states(&self) -> usize {
        self.rows.len()
    }

    fn letters(&self) -> i64 {
        self.dfa.alphabet().len() as i64
    }

    pub fn probability(&self, p: State, q: State) -> Rational {
        let count = self.rows[p]
            .iter()
            .find(|(t, _)| *t == q)
            .map_or(0, |&(_, c)| c);
        rational(count as i64, self.letters())
    }

    /// Dense transition matrix; rows sum to one.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.num_states();
        (0..n)
            .map(|p| (0..n).map(|q| self.probability(p, q)).collect())
            .collect()
    }

    /// Bottom strongly connected components with their periods and
    /// stationary distributions.
    pub fn recurrent_classes(&self) -> Result<Vec<RecurrentClass>> {
        let structure = self.structure();
        structure
            .components
            .iter()
            .zip(&structure.bottom)
            .filter(|(_, &b)| b)
            .map(|(c, _)| self.recurrent_class(c))
            .collect()
    }

    fn structure(&self) -> Structure {
        let adjacency: Vec<Vec<State>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&(q, _)| q).collect())
            .collect();
        let components = strongly_connected_components(&adjacency);
        let ids = component_ids(self.num_states(), &components);
        let bottom = components
            .iter()
            .enumerate()
            .map(|(c, members)| {
                members
                    .iter()
                    .all(|&p| self.rows[p].iter().all(|&(q, _)| ids[q] == c))
            })
            .collect();
        Structure {
            components,
            ids,
            bottom,
        }
    }

    fn recurrent_class(&self, states: &[State]) -> Result<RecurrentClass> {
        let local = |q: State| states.binary_search(&q).ok();
        let s = states.len();

        // BFS levels inside the class; the period is the gcd of the level
        // defects `level(u) + 1 - level(v)` over internal edges.
        let mut level = vec![usize::MAX; s];
        level[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &(q, _) in &self.rows[states[i]] {
                let j = local(q).expect("bottom class is closed");
                if level[j] == usize::MAX {
                    level[j] = level[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        let mut period = 0usize;
        for i in 0..s {
            for &(q, _) in &self.rows[states[i]] {
                let j = local(q).expect("bottom class is closed");
                let defect = (level[i] as i64 + 1 - level[j] as i64).unsigned_abs() as usize;
                period = period.gcd(&defect);
            }
        }

        let stationary = if s == 1 {
            vec![int(1)]
        } else {
            // π P = π on all but the last equation, Σ π = 1 on the last.
            let mut a = vec![vec![Rational::zero(); s]; s];
            for (u, &p) in states.iter().enumerate() {
                for &(q, c) in &self.rows[p] {
                    let v = local(q).expect("bottom class is closed");
                    if v + 1 < s {
                        a[v][u] += rational(c as i64, self.letters());
                    }
                }
                if u + 1 < s {
                    a[u][u] -= int(1);
                }
            }
            a[s - 1] = vec![int(1); s];
            let mut b = vec![Rational::zero(); s];
            b[s - 1] = int(1);
            solve(&a, &b)?
        };

        Ok(RecurrentClass {
            states: states.to_vec(),
            period,
            phase: level.iter().map(|l| l % period).collect(),
            stationary,
        })
    }
}

struct Structure {
    // reverse topological order: successors of a component come earlier
    components: Vec<Vec<State>>,
    ids: Vec<usize>,
    bottom: Vec<bool>,
}

/// A closed communicating class of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrentClass {
    /// Member states, sorted.
    pub states: Vec<State>,
    /// gcd of the cycle lengths inside the class.
    pub period: usize,
    /// Cyclic subclass of each member, aligned with `states`.
    pub phase: Vec<usize>,
    /// Stationary distribution, aligned with `states`.
    pub stationary: Vec<Rational>,
}

impl RecurrentClass {
    /// Stationary mass of the accepting members.
    pub fn accepting_mass(&self, dfa: &Dfa) -> Rational {
        self.states
            .iter()
            .zip(&self.stationary)
            .filter(|(&q, _)| dfa.is_accepting(q))
            .map(|(_, p)| p.clone())
            .sum()
    }

    /// Limit of the acceptance probability along steps `t ≡ r (mod period)`
    /// for a chain started in cyclic subclass `start_phase`.
    fn phase_limit(&self, dfa: &Dfa, start_phase: usize, r: usize) -> Rational {
        let target = (start_phase + r) % self.period;
        let mass: Rational = self
            .states
            .iter()
            .zip(&self.stationary)
            .zip(&self.phase)
            .filter(|((&q, _), &ph)| ph == target && dfa.is_accepting(q))
            .map(|((_, p), _)| p.clone())
            .sum();
        mass * int(self.period as i64)
    }
}

/// Density, natural density and per-residue limits of a regular language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub density: Rational,
    /// `None` when the ratio sequence has no limit.
    pub natural_density: Option<Rational>,
    /// The modulus `c`: the ratio sequence converges along every residue
    /// class modulo `c`.
    pub modulus: usize,
    /// `(d, lim_n ratio[c·n + d])` for `d = 0..c`.
    pub accumulation_points: Vec<(usize, Rational)>,
}

/// Exact Cesàro density.
pub fn density(dfa: &Dfa) -> Result<Rational> {
    let chain = UniformChain::new(&dfa.minimize());
    let structure = chain.structure();
    let n = chain.num_states();
    let k = chain.letters();
    let mut value: Vec<Option<Rational>> = vec![None; n];

    for (c, members) in structure.components.iter().enumerate() {
        if structure.bottom[c] {
            let class = chain.recurrent_class(members)?;
            let mass = class.accepting_mass(chain.dfa());
            for &q in members {
                value[q] = Some(mass.clone());
            }
            continue;
        }
        // (I - P_TT) v_T = P_T,out v_out
        let local = |q: State| members.binary_search(&q).ok();
        let m = members.len();
        let mut a = vec![vec![Rational::zero(); m]; m];
        let mut b = vec![Rational::zero(); m];
        for (i, &p) in members.iter().enumerate() {
            a[i][i] += int(1);
            for &(q, cnt) in &chain.rows[p] {
                let pr = rational(cnt as i64, k);
                match local(q) {
                    Some(j) => a[i][j] -= pr,
                    None => b[i] += pr * value[q].as_ref().expect("successor solved first"),
                }
            }
        }
        let x = if m == 1 {
            vec![&b[0] / &a[0][0]]
        } else {
            solve(&a, &b)?
        };
        for (i, &p) in members.iter().enumerate() {
            value[p] = Some(x[i].clone());
        }
    }
    Ok(value[chain.dfa().initial()]
        .take()
        .expect("initial state solved"))
}

/// Density together with the accumulation points of the ratio sequence.
pub fn natural_density(dfa: &Dfa) -> Result<DensityReport> {
    let chain = UniformChain::new(&dfa.minimize());
    let structure = chain.structure();
    let n = chain.num_states();
    let k = chain.letters();

    let mut classes = Vec::new();
    for (c, members) in structure.components.iter().enumerate() {
        if structure.bottom[c] {
            classes.push((c, chain.recurrent_class(members)?));
        }
    }
    let modulus = classes
        .iter()
        .fold(1usize, |acc, (_, class)| acc.lcm(&class.period));

    // limit[q][r] = lim_n Pr(X_{c·n + r} ∈ F | X_0 = q)
    let mut limit: Vec<Vec<Rational>> = vec![Vec::new(); n];
    let mut class_iter = classes.iter().peekable();
    for (c, members) in structure.components.iter().enumerate() {
        if structure.bottom[c] {
            let (_, class) = class_iter.next().expect("bottom classes in order");
            for (i, &q) in class.states.iter().enumerate() {
                limit[q] = (0..modulus)
                    .map(|r| class.phase_limit(chain.dfa(), class.phase[i], r))
                    .collect();
            }
            continue;
        }
        let local = |q: State| members.binary_search(&q).ok();
        let m = members.len();
        let size = m * modulus;
        let mut a = vec![vec![Rational::zero(); size]; size];
        let mut b = vec![Rational::zero(); size];
        for (i, &p) in members.iter().enumerate() {
            for r in 0..modulus {
                let row = i * modulus + r;
                let prev = (r + modulus - 1) % modulus;
                a[row][row] += int(1);
                for &(q, cnt) in &chain.rows[p] {
                    let pr = rational(cnt as i64, k);
                    match local(q) {
                        Some(j) => a[row][j * modulus + prev] -= pr,
                        None => b[row] += pr * &limit[q][prev],
                    }
                }
            }
        }
        let x = solve(&a, &b)?;
        for (i, &p) in members.iter().enumerate() {
            limit[p] = x[i * modulus..(i + 1) * modulus].to_vec();
        }
    }
    let _ = structure.ids;

    let points: Vec<(usize, Rational)> = limit[chain.dfa().initial()]
        .iter()
        .cloned()
        .enumerate()
        .collect();
    let natural = if points.iter().all(|(_, v)| *v == points[0].1) {
        Some(points[0].1.clone())
    } else {
        None
    };
    Ok(DensityReport {
        density: density(dfa)?,
        natural_density: natural,
        modulus,
        accumulation_points: points,
    })
}

/// True iff the density is zero.
pub fn is_null(dfa: &Dfa) -> Result<bool> {
    Ok(density(dfa)?.is_zero())
}

/// True iff every word is a factor of some member.
pub fn is_dense(dfa: &Dfa) -> Result<bool> {
    Ok(dfa.shortest_forbidden_word()?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{builtin, mod_counter_dfa};
    use crate::numbers::{one, zero};
    use crate::word::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn starts_with_a() {
        let d = builtin("starts:a", &ab()).unwrap();
        assert_eq!(density(&d).unwrap(), rational(1, 2));
        let r = natural_density(&d).unwrap();
        assert_eq!(r.natural_density, Some(rational(1, 2)));
        assert_eq!(r.modulus, 1);
        let abc = Alphabet::parse("abc").unwrap();
        assert_eq!(
            density(&builtin("starts:a", &abc).unwrap()).unwrap(),
            rational(1, 3)
        );
    }

    #[test]
    fn even_lengths_have_no_natural_density() {
        let d = builtin("evens", &ab()).unwrap();
        let r = natural_density(&d).unwrap();
        assert_eq!(r.density, rational(1, 2));
        assert_eq!(r.natural_density, None);
        assert_eq!(r.modulus, 2);
        assert_eq!(r.accumulation_points, vec![(0, one()), (1, zero())]);
    }

    #[test]
    fn empty_language() {
        let r = natural_density(&builtin("empty", &ab()).unwrap()).unwrap();
        assert_eq!(r.density, zero());
        assert_eq!(r.natural_density, Some(zero()));
        assert!(r.accumulation_points.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn mod_three_counter() {
        let d = mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap();
        assert_eq!(density(&d).unwrap(), rational(2, 3));
        let classes = UniformChain::new(&d).recurrent_classes().unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].period, 1);
        assert_eq!(classes[0].stationary, vec![rational(1, 3); 3]);
    }

    #[test]
    fn even_modulus_counter_is_periodic() {
        // |w|_a - |w|_b mod 4 alternates parity with length
        let d = mod_counter_dfa(&ab(), 4, 'a', 'b', &[]).unwrap();
        let r = natural_density(&d).unwrap();
        assert_eq!(r.modulus, 2);
        assert_eq!(r.accumulation_points, vec![(0, rational(1, 2)), (1, one())]);
        assert_eq!(r.density, rational(3, 4));
    }

    #[test]
    fn null_and_dense_predicates() {
        let a_star = builtin("star:a", &ab()).unwrap();
        assert!(is_null(&a_star).unwrap());
        assert!(!is_dense(&a_star).unwrap());
        let m3 = mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap();
        assert!(!is_null(&m3).unwrap());
        assert!(is_dense(&m3).unwrap());
        let all = builtin("all", &ab()).unwrap();
        assert_eq!(density(&all).unwrap(), one());
        assert!(is_dense(&all).unwrap());
    }

    #[test]
    fn chain_rows_are_stochastic() {
        let d = builtin("starts:b", &ab()).unwrap();
        for row in UniformChain::new(&d).matrix() {
            assert_eq!(row.into_iter().sum::<Rational>(), one());
        }
    }

    #[test]
    fn transient_cycle_before_absorption() {
        // a-loop on the initial state, b leads to an even-length class
        let d = Dfa::new(ab(), vec![vec![0, 1], vec![2, 2], vec![1, 1]], 0, [1]).unwrap();
        let r = natural_density(&d).unwrap();
        assert_eq!(r.density, rational(1, 2));
        // lim along even n: Pr(odd number of steps spent after the first b) = 1/3
        assert_eq!(
            r.accumulation_points,
            vec![(0, rational(1, 3)), (1, rational(2, 3))]
        );
    }
}
