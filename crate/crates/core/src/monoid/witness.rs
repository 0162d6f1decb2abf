use std::collections::VecDeque;

use num_traits::Zero;

use super::{transition_monoid, Element, GreenClasses, Monoid};
use crate::automata::Dfa;
use crate::density::density;
use crate::error::{Error, Result};
use crate::languages::predicates::primitive;
use crate::numbers::Rational;
use crate::word::{Letter, Word};

/// Least `n ≥ 1` with `t^n` idempotent.
pub fn idempotent_power(m: &Monoid, t: Element) -> usize {
    let mut power = t;
    for n in 1..=m.len() {
        if m.is_idempotent(power) {
            return n;
        }
        power = m.compose(power, t);
    }
    unreachable!("some power of an element of a finite monoid is idempotent")
}

/// Density of `η⁻¹(s)`.
pub fn jclass_language_density(m: &Monoid, s: Element) -> Result<Rational> {
    density(&m.element_automaton(&[s])?)
}

/// Words `x`, `y` with `η(x)·from·η(y) = to`, shortest total length first.
fn two_sided_path(m: &Monoid, from: Element, to: Element) -> Option<(Word, Word)> {
    let k = m.letters();
    let mut parent: Vec<Option<(Element, bool, Letter)>> = vec![None; m.len()];
    let mut seen = vec![false; m.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(e) = queue.pop_front() {
        if e == to {
            let (mut x, mut y) = (Vec::new(), Vec::new());
            let mut cur = e;
            while let Some((prev, left, a)) = parent[cur] {
                if left {
                    x.push(a);
                } else {
                    y.push(a);
                }
                cur = prev;
            }
            // walking back yields `x` in order and `y` backwards
            y.reverse();
            return Some((Word(x), Word(y)));
        }
        for a in 0..k as Letter {
            for (next, left) in [(m.right_step(e, a), false), (m.left_step(e, a), true)] {
                if !seen[next] {
                    seen[next] = true;
                    parent[next] = Some((e, left, a));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// A non-empty `w` and `n ≥ 1` such that `w^{jn+1}` is accepted for every
/// `j ≥ 1`. Membership and non-primitivity are verified for `j ∈ {1,2,3}`.
pub fn nonprimitive_witness(dfa: &Dfa) -> Result<(Word, usize)> {
    if density(dfa)?.is_zero() {
        return Err(Error::NullLanguage);
    }
    let (m, accept) = transition_monoid(dfa)?;
    let green = GreenClasses::new(&m);
    let t = accept
        .elements()
        .filter(|&e| green.is_j_minimal(e))
        .min_by(|&e, &f| m.witness(e).cmp(m.witness(f)))
        .ok_or_else(|| {
            Error::Internal("non-null language without a J-minimal accepted element".into())
        })?;

    let mut w = m.witness(t).clone();
    if w.is_empty() {
        let a: Letter = 0;
        let ta = m.right_step(t, a);
        let (x, y) = two_sided_path(&m, ta, t).ok_or_else(|| {
            Error::Internal("J-minimal element is not J-equivalent to t·a".into())
        })?;
        w = Word([x.0, vec![a], y.0].concat());
    }
    debug_assert_eq!(m.evaluate(w.letters()), t);

    let n = idempotent_power(&m, t);
    for j in 1..=3 {
        let p = w.power(j * n + 1);
        if !dfa.accepts(p.letters()) || primitive(p.letters()) {
            return Err(Error::Internal(format!(
                "witness power {} failed verification",
                j * n + 1
            )));
        }
    }
    Ok((w, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{builtin, mod_counter_dfa};
    use crate::numbers::{one, rational, zero};
    use crate::word::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn idempotent_powers() {
        let (m, _) = transition_monoid(&mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap()).unwrap();
        assert_eq!(idempotent_power(&m, m.identity()), 1);
        assert_eq!(idempotent_power(&m, m.generator(0)), 3);
        let (m, _) = transition_monoid(&builtin("starts:a", &ab()).unwrap()).unwrap();
        assert_eq!(idempotent_power(&m, m.generator(0)), 1);
    }

    #[test]
    fn witness_examples() {
        let a = ab();
        let (w, n) = nonprimitive_witness(&builtin("all", &a).unwrap()).unwrap();
        assert_eq!((a.render(w.letters()), n), ("a".into(), 1));
        let (w, n) = nonprimitive_witness(&mod_counter_dfa(&a, 3, 'a', 'b', &[]).unwrap()).unwrap();
        assert_eq!((a.render(w.letters()), n), ("a".into(), 3));
        assert_eq!(
            nonprimitive_witness(&builtin("star:a", &a).unwrap()),
            Err(Error::NullLanguage)
        );
    }

    #[test]
    fn empty_witness_is_extended() {
        // even length: identity is accepted and the monoid is a group
        let a = ab();
        let (w, n) = nonprimitive_witness(&builtin("evens", &a).unwrap()).unwrap();
        assert_eq!(w.len() % 2, 0);
        assert!(!w.is_empty());
        assert_eq!(n, 1);
    }

    #[test]
    fn element_language_densities() {
        let (m, _) = transition_monoid(&mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap()).unwrap();
        assert_eq!(
            jclass_language_density(&m, m.generator(0)).unwrap(),
            rational(1, 3)
        );
        let (m, _) = transition_monoid(&builtin("starts:a", &ab()).unwrap()).unwrap();
        assert_eq!(jclass_language_density(&m, m.identity()).unwrap(), zero());
        let (m, _) = transition_monoid(&builtin("all", &ab()).unwrap()).unwrap();
        assert_eq!(jclass_language_density(&m, m.identity()).unwrap(), one());
    }
}
