use super::{Dfa, Nfa, DEFAULT_SUBSET_BUDGET};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter};

/// `k`-state counter accepting `{w : |w|_a ≢ |w|_b (mod k)}`.
///
/// `a` moves `q_i` to `q_{i+1}`, `b` moves it to `q_{i-1}`, and every
/// letter in `loops` is the identity. Every letter of the alphabet must be
/// `a`, `b` or a loop letter.
pub fn mod_counter_dfa(
    alphabet: &Alphabet,
    k: usize,
    a: char,
    b: char,
    loops: &[char],
) -> Result<Dfa> {
    if k == 0 {
        return Err(Error::InvalidParameter("modulus must be at least 1".into()));
    }
    if a == b {
        return Err(Error::InvalidParameter(
            "counted letters must differ".into(),
        ));
    }
    if loops.contains(&a) || loops.contains(&b) {
        return Err(Error::InvalidParameter(
            "loop letters must differ from a and b".into(),
        ));
    }
    let ia = alphabet.letter(a)?;
    let ib = alphabet.letter(b)?;
    for &c in loops {
        alphabet.letter(c)?;
    }
    if let Some(&c) = alphabet
        .symbols()
        .iter()
        .find(|c| **c != a && **c != b && !loops.contains(c))
    {
        return Err(Error::InvalidParameter(format!(
            "letter {c:?} is neither counted nor looped"
        )));
    }
    let table = (0..k)
        .map(|i| {
            alphabet
                .letters()
                .map(|l| {
                    if l == ia {
                        (i + 1) % k
                    } else if l == ib {
                        (i + k - 1) % k
                    } else {
                        i
                    }
                })
                .collect()
        })
        .collect();
    Dfa::new(alphabet.clone(), table, 0, 1..k)
}

/// Minimal DFA for `A* p A*`.
pub fn pattern_occurrence_dfa(alphabet: &Alphabet, pattern: &[Letter]) -> Result<Dfa> {
    let m = pattern.len();
    let mut nfa = Nfa::new(alphabet.clone(), m + 1);
    nfa.add_initial(0);
    for a in alphabet.letters() {
        nfa.add_edge(0, a, 0);
        nfa.add_edge(m, a, m);
    }
    for (i, &a) in pattern.iter().enumerate() {
        nfa.add_edge(i, a, i + 1);
    }
    nfa.set_accepting(m);
    Ok(nfa.determinize(DEFAULT_SUBSET_BUDGET)?.minimize())
}

/// Small named machines over `alphabet`:
///
/// | name        | language                                 |
/// |-------------|------------------------------------------|
/// | `all`       | `A*`                                     |
/// | `empty`     | `∅`                                      |
/// | `epsilon`   | `{ε}`                                    |
/// | `evens`     | `(AA)*`                                  |
/// | `starts:x`  | `x A*`                                   |
/// | `ends:x`    | `A* x`                                   |
/// | `star:x`    | `x*`                                     |
/// | `modk:k`    | mod-`k` counter on the first two letters |
pub fn builtin(source: &str, alphabet: &Alphabet) -> Result<Dfa> {
    let (name, arg) = match source.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (source, None),
    };
    let k = alphabet.len();
    let letter_arg = || -> Result<Letter> {
        let arg = arg.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a letter")))?;
        let mut chars = arg.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet.letter(c),
            _ => Err(Error::InvalidParameter(format!("bad letter {arg:?}"))),
        }
    };
    let no_arg = || -> Result<()> {
        match arg {
            None => Ok(()),
            Some(_) => Err(Error::InvalidParameter(format!("{name} takes no argument"))),
        }
    };
    match name {
        "all" => no_arg().map(|_| Dfa::trivial(alphabet.clone(), true)),
        "empty" => no_arg().map(|_| Dfa::trivial(alphabet.clone(), false)),
        "epsilon" => {
            no_arg()?;
            Dfa::new(alphabet.clone(), vec![vec![1; k], vec![1; k]], 0, [0])
        }
        "evens" => {
            no_arg()?;
            Dfa::new(alphabet.clone(), vec![vec![1; k], vec![0; k]], 0, [0])
        }
        "starts" => {
            let x = letter_arg()? as usize;
            let mut first = vec![2; k];
            first[x] = 1;
            Dfa::new(
                alphabet.clone(),
                vec![first, vec![1; k], vec![2; k]],
                0,
                [1],
            )
        }
        "ends" => {
            let x = letter_arg()? as usize;
            let row: Vec<usize> = (0..k).map(|l| usize::from(l == x)).collect();
            Dfa::new(alphabet.clone(), vec![row.clone(), row], 0, [1])
        }
        "star" => {
            let x = letter_arg()? as usize;
            let row: Vec<usize> = (0..k).map(|l| usize::from(l != x)).collect();
            Dfa::new(alphabet.clone(), vec![row, vec![1; k]], 0, [0])
        }
        "modk" => {
            let modulus: usize = arg
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidParameter("modk needs a positive integer".into()))?;
            let symbols = alphabet.symbols();
            if symbols.len() < 2 {
                return Err(Error::InvalidParameter("modk needs two letters".into()));
            }
            mod_counter_dfa(alphabet, modulus, symbols[0], symbols[1], &symbols[2..])
        }
        _ => Err(Error::InvalidParameter(format!(
            "unknown builtin automaton {source:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_up_to;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn mod_three_counter_shape() {
        let d = mod_counter_dfa(&ab(), 3, 'a', 'b', &[]).unwrap();
        assert_eq!(d.num_states(), 3);
        assert_eq!(d.accepting_states().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.count_words(1).counts()[1], 2u32.into());
    }

    #[test]
    fn mod_one_counter_is_empty() {
        let d = mod_counter_dfa(&ab(), 1, 'a', 'b', &[]).unwrap();
        assert_eq!(d.num_states(), 1);
        assert!(d.is_empty());
    }

    #[test]
    fn loop_letters_are_ignored() {
        let abc = Alphabet::parse("abc").unwrap();
        let d = mod_counter_dfa(&abc, 3, 'a', 'b', &['c']).unwrap();
        assert!(d.accepts(abc.word("cac").unwrap().letters()));
        assert!(!d.accepts(abc.word("cabc").unwrap().letters()));
    }

    #[test]
    fn counter_parameter_errors() {
        let abc = Alphabet::parse("abc").unwrap();
        assert!(mod_counter_dfa(&ab(), 0, 'a', 'b', &[]).is_err());
        assert!(mod_counter_dfa(&ab(), 3, 'a', 'a', &[]).is_err());
        assert!(mod_counter_dfa(&abc, 3, 'a', 'b', &['a']).is_err());
        assert!(mod_counter_dfa(&abc, 3, 'a', 'b', &[]).is_err());
    }

    #[test]
    fn counter_matches_definition() {
        let d = mod_counter_dfa(&ab(), 5, 'a', 'b', &[]).unwrap();
        for w in words_up_to(2, 10) {
            let diff = w.count(0) as i64 - w.count(1) as i64;
            assert_eq!(d.accepts(w.letters()), diff.rem_euclid(5) != 0);
        }
    }

    #[test]
    fn pattern_automaton() {
        let abc = Alphabet::parse("abc").unwrap();
        let p = abc.word("cac").unwrap();
        let d = pattern_occurrence_dfa(&abc, p.letters()).unwrap();
        for w in words_up_to(3, 6) {
            let s = abc.render(w.letters());
            assert_eq!(d.accepts(w.letters()), s.contains("cac"), "{s}");
        }
    }

    #[test]
    fn builtins_parse() {
        let a = ab();
        for source in [
            "all", "empty", "epsilon", "evens", "starts:a", "ends:b", "star:a", "modk:3",
        ] {
            builtin(source, &a).unwrap();
        }
        assert!(builtin("starts", &a).is_err());
        assert!(builtin("starts:z", &a).is_err());
        assert!(builtin("evens:1", &a).is_err());
        assert!(builtin("bogus", &a).is_err());
        let star = builtin("star:a", &a).unwrap();
        assert!(star.accepts(&[0, 0]) && !star.accepts(&[0, 1]));
    }
}
