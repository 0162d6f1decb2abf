use std::collections::HashMap;

use super::{Approximant, Direction};
use crate::automata::{builtin, mod_counter_dfa, Dfa, DEFAULT_SUBSET_BUDGET};
use crate::census::Language;
use crate::error::{Error, Result};
use crate::languages::goldstine_word_prefix;
use crate::numbers::{inverse_power, one, rational, zero, Rational};
use crate::word::{checked_count, decode_word, Alphabet, Letter};

pub const DEFAULT_STATE_BUDGET: usize = 200_000;

fn ab() -> Alphabet {
    Alphabet::parse("ab").expect("built-in alphabet is valid")
}

fn positive(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter(
            "family parameter must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// `A_k ⊆ complement(L(a, b))` over `{a, b}`; density `(k-1)/k` for odd `k`.
pub fn modk_inner(k: usize) -> Result<Approximant> {
    positive(k)?;
    let claimed = (k % 2 == 1).then(|| rational(k as i64 - 1, k as i64));
    Ok(Approximant::new(
        mod_counter_dfa(&ab(), k, 'a', 'b', &[])?,
        Direction::Inner,
        claimed,
    ))
}

/// `complement(A_k) ⊇ L(a, b)`; density `1/k` for odd `k`.
pub fn modk_outer(k: usize) -> Result<Approximant> {
    positive(k)?;
    let claimed = (k % 2 == 1).then(|| rational(1, k as i64));
    Ok(Approximant::new(
        mod_counter_dfa(&ab(), k, 'a', 'b', &[])?.complement(),
        Direction::Outer,
        claimed,
    ))
}

/// Union of the complements of two self-looped counters.
fn two_counter_outer(
    alphabet: &str,
    first: (char, char, &[char]),
    second: (char, char, &[char]),
    k: usize,
) -> Result<Approximant> {
    positive(k)?;
    let alphabet = Alphabet::parse(alphabet)?;
    let one = mod_counter_dfa(&alphabet, k, first.0, first.1, first.2)?;
    let two = mod_counter_dfa(&alphabet, k, second.0, second.1, second.2)?;
    let dfa = one.complement().union(&two.complement())?.minimize();
    Ok(Approximant::new(dfa, Direction::Outer, None))
}

/// Outer approximation of `O3`.
pub fn o3_outer(k: usize) -> Result<Approximant> {
    two_counter_outer("abc", ('a', 'b', &['c']), ('a', 'c', &['b']), k)
}

/// Outer approximation of `O4`.
pub fn o4_outer(k: usize) -> Result<Approximant> {
    two_counter_outer("xXyY", ('x', 'X', &['y', 'Y']), ('y', 'Y', &['x', 'X']), k)
}

/// `⋃ {w1 A* w2 : |w1| = |w2| = k, w1 ≠ rev(w2)} ⊆ complement(P_A)`;
/// density `1 - |A|^{-k}`.
pub fn pal_inner(alphabet: &Alphabet, k: usize, state_budget: usize) -> Result<Approximant> {
    positive(k)?;
    let size = alphabet.len();
    let pairs = checked_count(size, 2 * k).unwrap_or(u64::MAX);
    if pairs > state_budget as u64 {
        return Err(Error::budget(
            "palindrome approximant states",
            pairs as u128,
            state_budget as u128,
        ));
    }
    // (first min(len, k) letters, last min(len, k) letters, min(len, 2k))
    type Key = (Vec<Letter>, Vec<Letter>, usize);
    let mut ids: HashMap<Key, usize> = HashMap::new();
    let mut keys: Vec<Key> = vec![(Vec::new(), Vec::new(), 0)];
    ids.insert(keys[0].clone(), 0);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        let (first, last, len) = keys[i].clone();
        let mut row = Vec::with_capacity(size);
        for a in alphabet.letters() {
            let mut first = first.clone();
            if first.len() < k {
                first.push(a);
            }
            let mut last = last.clone();
            last.push(a);
            if last.len() > k {
                last.remove(0);
            }
            let key = (first, last, (len + 1).min(2 * k));
            let next = keys.len();
            let id = *ids.entry(key.clone()).or_insert_with(|| {
                keys.push(key);
                next
            });
            if keys.len() > state_budget {
                return Err(Error::budget(
                    "palindrome approximant states",
                    keys.len() as u128,
                    state_budget as u128,
                ));
            }
            row.push(id);
        }
        table.push(row);
        i += 1;
    }
    let accepting = keys
        .iter()
        .enumerate()
        .filter(|(_, (first, last, len))| *len == 2 * k && !first.iter().eq(last.iter().rev()))
        .map(|(q, _)| q);
    let dfa = Dfa::new(alphabet.clone(), table, 0, accepting)?.minimize();
    let claimed = one() - inverse_power(size, k);
    Ok(Approximant::new(dfa, Direction::Inner, Some(claimed)))
}

/// `⋃ {u A* b : u ∈ A^k, u not a prefix of a b a² b ⋯} ⊆ G`; density
/// `1/2 - 2^{-k-1}`.
pub fn goldstine_inner(k: usize) -> Result<Approximant> {
    positive(k)?;
    let w = goldstine_word_prefix(k);
    // matched(i) = i, diverged(i) = k + i, then tail-a, tail-b, dead
    let (tail_a, tail_b, dead) = (2 * k + 1, 2 * k + 2, 2 * k + 3);
    let mut table = vec![Vec::new(); 2 * k + 4];
    for i in 0..k {
        table[i] = (0..2)
            .map(|a| if a == w[i] { i + 1 } else { k + i + 1 })
            .collect();
    }
    table[k] = vec![dead, dead];
    for i in 1..k {
        table[k + i] = vec![k + i + 1; 2];
    }
    table[2 * k] = vec![tail_a, tail_b];
    table[tail_a] = vec![tail_a, tail_b];
    table[tail_b] = vec![tail_a, tail_b];
    table[dead] = vec![dead, dead];
    let dfa = Dfa::new(ab(), table, 0, [tail_b])?.minimize();
    let claimed = rational(1, 2) - inverse_power(2, k + 1);
    Ok(Approximant::new(dfa, Direction::Inner, Some(claimed)))
}

/// `A* b ⊇ G`; density `1/2`.
pub fn goldstine_outer() -> Result<Approximant> {
    Ok(Approximant::new(
        builtin("ends:b", &ab())?,
        Direction::Outer,
        Some(rational(1, 2)),
    ))
}

/// Members and non-members of `base` shorter than `n`, by enumeration.
fn split_short_words(
    base: &dyn Language,
    n: usize,
    budget: u64,
) -> Result<Vec<(Vec<Letter>, bool)>> {
    let size = base.alphabet().len();
    let total: u64 = (0..n)
        .map(|m| checked_count(size, m).unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add);
    if total > budget {
        return Err(Error::budget(
            "extension approximant words",
            total as u128,
            budget as u128,
        ));
    }
    let mut out = Vec::with_capacity(total as usize);
    for m in 0..n {
        let mut buf = vec![0; m];
        for i in 0..checked_count(size, m).expect("bounded above") {
            decode_word(size, i, &mut buf);
            let member = base.member(&buf)?;
            out.push((buf.clone(), member));
        }
    }
    Ok(out)
}

/// Inner and outer approximants of the suffix extension `L {c} B*`.
///
/// The inner one is `⋃ {w c B* : w ∈ L, |w| < n}`, the outer one is
/// `B* ∖ ⋃ {w c B* : w ∉ L, |w| < n}`.
pub fn suffix_ext_pair(
    base: &dyn Language,
    c: char,
    n: usize,
    state_budget: usize,
) -> Result<(Approximant, Approximant)> {
    let alphabet = base.alphabet().extended(c)?;
    let big_k = alphabet.len();
    let small_k = base.alphabet().len();
    let c_letter = alphabet.letter(c)?;
    let words = split_short_words(base, n, state_budget as u64)?;

    // trie over A^{<n}: words[i] has id i, in length-then-lex order
    let mut offset = vec![0usize; n + 1];
    for m in 0..n {
        offset[m + 1] = offset[m] + checked_count(small_k, m).expect("bounded above") as usize;
    }
    let index_of = |w: &[Letter]| -> usize {
        let mut i = 0usize;
        for &l in w {
            i = i * small_k + l as usize;
        }
        offset[w.len()] + i
    };
    let trie = words.len();
    let (yes, no, overflow) = (trie, trie + 1, trie + 2);

    let build = |direction: Direction| -> Result<Dfa> {
        let mut table = Vec::with_capacity(trie + 3);
        for (w, member) in &words {
            let row = (0..big_k)
                .map(|a| {
                    if a as Letter == c_letter {
                        if *member {
                            yes
                        } else {
                            no
                        }
                    } else if w.len() + 1 < n {
                        let mut next = w.clone();
                        next.push(a as Letter);
                        index_of(&next)
                    } else {
                        overflow
                    }
                })
                .collect();
            table.push(row);
        }
        table.push(vec![yes; big_k]);
        table.push(vec![no; big_k]);
        table.push(vec![overflow; big_k]);
        let accepting: Vec<usize> = match direction {
            Direction::Inner => vec![yes],
            Direction::Outer => (0..trie).chain([yes, overflow]).collect(),
        };
        Ok(Dfa::new(alphabet.clone(), table, 0, accepting)?.minimize())
    };

    let mut inner_mass = zero();
    let mut outer_gap = zero();
    for (w, member) in &words {
        let mass = inverse_power(big_k, w.len() + 1);
        if *member {
            inner_mass += mass;
        } else {
            outer_gap += mass;
        }
    }
    let inner = Approximant::new(build(Direction::Inner)?, Direction::Inner, Some(inner_mass));
    let outer = Approximant::new(
        build(Direction::Outer)?,
        Direction::Outer,
        Some(one() - outer_gap),
    );
    Ok((inner, outer))
}

/// Reversal of a suffix-extension pair for the reversed base: approximants
/// of the prefix extension `B* {c} L`.
pub fn prefix_ext_pair(
    base: &dyn Language,
    c: char,
    n: usize,
    state_budget: usize,
) -> Result<(Approximant, Approximant)> {
    let (inner, outer) = suffix_ext_pair(&ReversedOracle(base), c, n, state_budget)?;
    let flip = |a: Approximant| -> Result<Approximant> {
        let dfa = a
            .dfa
            .reverse()
            .determinize(DEFAULT_SUBSET_BUDGET)?
            .minimize();
        Ok(Approximant::new(dfa, a.direction, a.claimed_density))
    };
    Ok((flip(inner)?, flip(outer)?))
}

struct ReversedOracle<'a>(&'a dyn Language);

impl Language for ReversedOracle<'_> {
    fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    fn member(&self, w: &[Letter]) -> Result<bool> {
        let r: Vec<Letter> = w.iter().rev().copied().collect();
        self.0.member(&r)
    }
}

/// Approximants of the infix extension `B* {c} L {c} B*`: the inner one is
/// `B* c w c B*` for the shortlex-least `w ∈ L` shorter than `n` (empty
/// when there is none); the outer one is `B*`.
pub fn infix_ext_pair(
    base: &dyn Language,
    c: char,
    n: usize,
    state_budget: usize,
) -> Result<(Approximant, Approximant)> {
    let alphabet = base.alphabet().extended(c)?;
    let c_letter = alphabet.letter(c)?;
    let words = split_short_words(base, n, state_budget as u64)?;
    let inner = match words.iter().find(|(_, member)| *member) {
        Some((w, _)) => {
            let mut pattern = vec![c_letter];
            pattern.extend(w);
            pattern.push(c_letter);
            let dfa = crate::automata::pattern_occurrence_dfa(&alphabet, &pattern)?;
            Approximant::new(dfa, Direction::Inner, Some(one()))
        }
        None => Approximant::new(
            Dfa::trivial(alphabet.clone(), false),
            Direction::Inner,
            Some(zero()),
        ),
    };
    let outer = Approximant::new(Dfa::trivial(alphabet, true), Direction::Outer, Some(one()));
    Ok((inner, outer))
}

/// `Σ_{m ≥ n} |A|^m |B|^{-(m+1)}` for `|B| = |A| + 1`, in closed form
/// `(|A|/|B|)^n`.
pub fn suffix_gap_closed_form(small_k: usize, n: usize) -> Rational {
    let big_k = small_k + 1;
    crate::numbers::ratio(
        &crate::numbers::big_pow(small_k, n),
        &crate::numbers::big_pow(big_k, n),
    )
}
