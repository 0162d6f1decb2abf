use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Monoid morphism `A* → A*` given by letter images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::InvalidParameter(format!(
                "morphism needs {} images, got {}",
                alphabet.len(),
                images.len()
            )));
        }
        if images
            .iter()
            .flat_map(|w| w.letters())
            .any(|&l| l as usize >= alphabet.len())
        {
            return Err(Error::InvalidParameter(
                "image uses a letter outside the alphabet".into(),
            ));
        }
        Ok(Morphism { alphabet, images })
    }

    /// Parses `a>ab,b>a`. Letters without a rule map to themselves. The
    /// first listed letter is returned as the seed.
    pub fn parse(alphabet: &Alphabet, source: &str) -> Result<(Self, Letter)> {
        let mut images: Vec<Option<Word>> = vec![None; alphabet.len()];
        let mut seed = None;
        for rule in source.split(',') {
            let (lhs, rhs) = rule
                .split_once('>')
                .ok_or_else(|| Error::InvalidParameter(format!("bad morphism rule {rule:?}")))?;
            let mut chars = lhs.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => alphabet.letter(c)?,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "bad morphism rule {rule:?}"
                    )))
                }
            };
            if images[letter as usize].is_some() {
                return Err(Error::InvalidParameter(format!(
                    "letter {lhs:?} mapped twice"
                )));
            }
            images[letter as usize] = Some(alphabet.word(rhs)?);
            seed.get_or_insert(letter);
        }
        let seed = seed.ok_or_else(|| Error::InvalidParameter("empty morphism".into()))?;
        let images = images
            .into_iter()
            .enumerate()
            .map(|(l, w)| w.unwrap_or_else(|| Word(vec![l as Letter])))
            .collect();
        Ok((Morphism::new(alphabet.clone(), images)?, seed))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter as usize]
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        Word(
            w.iter()
                .flat_map(|&l| self.image(l).letters().iter().copied())
                .collect(),
        )
    }

    /// `h(seed)` starts with `seed` and is longer than one letter, so
    /// `h^ω(seed)` is infinite.
    pub fn ensure_prolongable(&self, seed: Letter) -> Result<()> {
        let image = self.image(seed);
        if image.letters().first() == Some(&seed) && image.len() >= 2 {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "morphism is not prolongable on {:?}",
                self.alphabet.symbol(seed)
            )))
        }
    }

    /// Length-`n` prefix of `h^ω(seed)`.
    pub fn fixed_point_prefix(&self, seed: Letter, n: usize) -> Result<Word> {
        self.ensure_prolongable(seed)?;
        let mut w = vec![seed];
        while w.len() < n {
            w = self.apply(&w).0;
        }
        w.truncate(n);
        Ok(Word(w))
    }
}

/// All prefixes of `h^ω(seed)` of length at most `n`.
pub fn coprefix_prefixes(h: &Morphism, seed: Letter, n: usize) -> Result<BTreeSet<Word>> {
    let w = h.fixed_point_prefix(seed, n)?;
    Ok((0..=n).map(|i| Word(w.letters()[..i].to_vec())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fibonacci() -> (Morphism, Letter) {
        Morphism::parse(&Alphabet::parse("ab").unwrap(), "a>ab,b>a").unwrap()
    }

    #[test]
    fn fibonacci_prefixes() {
        let (h, seed) = fibonacci();
        let a = h.alphabet().clone();
        let got: Vec<String> = coprefix_prefixes(&h, seed, 5)
            .unwrap()
            .iter()
            .map(|w| a.render(w.letters()))
            .collect();
        assert_eq!(got, vec!["", "a", "ab", "aba", "abaa", "abaab"]);
        assert_eq!(coprefix_prefixes(&h, seed, 0).unwrap().len(), 1);
    }

    #[test]
    fn non_prolongable_is_rejected() {
        let a = Alphabet::parse("ab").unwrap();
        let (h, seed) = Morphism::parse(&a, "a>b,b>a").unwrap();
        assert!(coprefix_prefixes(&h, seed, 3).is_err());
        let (h, seed) = Morphism::parse(&a, "a>a").unwrap();
        assert!(h.ensure_prolongable(seed).is_err());
    }

    #[test]
    fn parse_errors() {
        let a = Alphabet::parse("ab").unwrap();
        assert!(Morphism::parse(&a, "").is_err());
        assert!(Morphism::parse(&a, "a>ab,a>b").is_err());
        assert!(Morphism::parse(&a, "ab>a").is_err());
        assert!(Morphism::parse(&a, "a>ac").is_err());
    }

    #[test]
    fn prefix_is_a_fixed_point() {
        let (h, seed) = fibonacci();
        let w = h.fixed_point_prefix(seed, 30).unwrap();
        let hw = h.apply(w.letters());
        assert_eq!(&hw.letters()[..30], w.letters());
    }
}
