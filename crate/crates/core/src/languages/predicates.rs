//! Membership predicates on raw letter slices. Letters are alphabet
//! indices; each caller fixes which index plays which role.

use crate::word::{count_letter, Letter};

/// Balanced with every prefix `open`-heavy.
pub fn semi_dyck(w: &[Letter], open: Letter, close: Letter) -> bool {
    let mut depth: i64 = 0;
    for &x in w {
        if x == open {
            depth += 1;
        } else if x == close {
            depth -= 1;
            if depth < 0 {
                return false;
            }
        } else {
            return false;
        }
    }
    depth == 0
}

pub fn count_eq(w: &[Letter], a: Letter, b: Letter) -> bool {
    count_letter(w, a) == count_letter(w, b)
}

pub fn palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// `|w|_a > m·|w|_b`.
pub fn majority(w: &[Letter], m: usize, a: Letter, b: Letter) -> bool {
    count_letter(w, a) > m * count_letter(w, b)
}

/// Not `u^n` for any `n ≥ 2`; the empty word is not primitive.
pub fn primitive(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| w.chunks(d).any(|chunk| chunk != &w[..d]))
}

/// Maximal runs as `(letter, length)`.
pub fn runs(w: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &x in w {
        match out.last_mut() {
            Some((l, len)) if *l == x => *len += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// `a^{n_1} b ⋯ a^{n_p} b` with `p ≥ 1` and `n_i ≠ i` for some `i`.
pub fn goldstine(w: &[Letter], a: Letter, b: Letter) -> bool {
    if w.last() != Some(&b) || w.iter().any(|&x| x != a && x != b) {
        return false;
    }
    w[..w.len() - 1]
        .split(|&x| x == b)
        .enumerate()
        .any(|(i, block)| block.len() != i + 1)
}

/// `a (b^i a^i)*`, `i ≥ 1`.
pub fn kemp_s1(w: &[Letter], a: Letter, b: Letter) -> bool {
    let r = runs(w);
    match r.split_first() {
        Some((&(first, 1), rest)) if first == a && rest.len() % 2 == 0 => rest
            .chunks(2)
            .all(|p| p[0].0 == b && p[1].0 == a && p[0].1 == p[1].1),
        _ => false,
    }
}

/// `(a^i b^{2i})* a^+`, `i ≥ 1`.
pub fn kemp_s2(w: &[Letter], a: Letter, b: Letter) -> bool {
    let r = runs(w);
    match r.split_last() {
        Some((&(last, _), rest)) if last == a && rest.len() % 2 == 0 => rest
            .chunks(2)
            .all(|p| p[0].0 == a && p[1].0 == b && p[1].1 == 2 * p[0].1),
        _ => false,
    }
}

/// Prefix of `w` before its first `c`, when `c` occurs.
pub fn before_first(w: &[Letter], c: Letter) -> Option<&[Letter]> {
    w.iter().position(|&x| x == c).map(|i| &w[..i])
}

/// Suffix of `w` after its last `c`, when `c` occurs.
pub fn after_last(w: &[Letter], c: Letter) -> Option<&[Letter]> {
    w.iter().rposition(|&x| x == c).map(|i| &w[i + 1..])
}

/// Factors of `w` strictly between two consecutive occurrences of `c`.
pub fn between_consecutive(w: &[Letter], c: Letter) -> impl Iterator<Item = &[Letter]> {
    let positions: Vec<usize> = w
        .iter()
        .enumerate()
        .filter(|(_, &x)| x == c)
        .map(|(i, _)| i)
        .collect();
    (1..positions.len()).map(move |j| &w[positions[j - 1] + 1..positions[j]])
}
