//! Alphabets, words and shortlex enumeration.
//!
//! A [`Word`] is a sequence of letter indices; the index of a symbol is its
//! rank in the declaration order of the [`Alphabet`], and that rank is the
//! letter order used by shortlex comparison.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its alphabet.
pub type Letter = u8;

/// Largest alphabet the crate accepts.
pub const MAX_ALPHABET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("empty alphabet".into()));
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols, at most {MAX_ALPHABET} supported",
                symbols.len()
            )));
        }
        for (i, c) in symbols.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {c:?} is not printable"
                )));
            }
            if symbols[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet whose symbols are the characters of `s`, in order.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    pub fn letter(&self, symbol: char) -> Result<Letter> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as Letter)
            .ok_or(Error::UnknownSymbol(symbol))
    }

    pub fn contains(&self, symbol: char) -> bool {
        self.symbols.contains(&symbol)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len()).map(|i| i as Letter)
    }

    /// The alphabet extended by one fresh symbol placed last.
    pub fn extended(&self, symbol: char) -> Result<Self> {
        Self::new(self.symbols.iter().copied().chain(std::iter::once(symbol)))
    }

    pub fn word(&self, s: &str) -> Result<Word> {
        s.chars()
            .map(|c| self.letter(c))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.symbol(l)).collect()
    }

    pub fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word over some alphabet, ordered shortlex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        count_letter(&self.0, letter)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn shortlex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn count_letter(word: &[Letter], letter: Letter) -> usize {
    word.iter().filter(|&&l| l == letter).count()
}

/// All `|A|^n` words of length `n`, in shortlex (here: lexicographic) order.
pub fn enumerate_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    WordsOfLength::new(alphabet.len(), n).collect()
}

/// Every word of length at most `max_len`, in shortlex order.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |n| WordsOfLength::new(alphabet_size, n))
}

/// Odometer over `A^n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct WordsOfLength {
    size: Letter,
    current: Option<Vec<Letter>>,
}

impl WordsOfLength {
    pub fn new(alphabet_size: usize, n: usize) -> Self {
        assert!(alphabet_size > 0 && alphabet_size <= MAX_ALPHABET);
        WordsOfLength {
            size: alphabet_size as Letter,
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.size {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(Word(cur))
    }
}

/// Writes the `index`-th word of length `buf.len()` (lexicographic rank)
/// into `buf`.
pub fn decode_word(alphabet_size: usize, mut index: u64, buf: &mut [Letter]) {
    let k = alphabet_size as u64;
    for slot in buf.iter_mut().rev() {
        *slot = (index % k) as Letter;
        index /= k;
    }
}

/// `k^n`, or `None` on overflow.
pub fn checked_count(alphabet_size: usize, n: usize) -> Option<u64> {
    (alphabet_size as u64).checked_pow(n.try_into().ok()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn render_all(a: &Alphabet, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| a.render(&w.0)).collect()
    }

    #[test]
    fn enumerates_length_two_in_shortlex_order() {
        let a = ab();
        assert_eq!(
            render_all(&a, &enumerate_words(&a, 2)),
            ["aa", "ab", "ba", "bb"]
        );
    }

    #[test]
    fn length_zero_is_the_empty_word() {
        let ws = enumerate_words(&ab(), 0);
        assert_eq!(ws, vec![Word::empty()]);
    }

    #[test]
    fn three_letters_length_one() {
        let a = Alphabet::parse("abc").unwrap();
        assert_eq!(render_all(&a, &enumerate_words(&a, 1)), ["a", "b", "c"]);
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::parse("").is_err());
        assert!(Alphabet::parse("aba").is_err());
        assert!(Alphabet::parse("a b").is_err());
    }

    #[test]
    fn shortlex_puts_shorter_words_first() {
        let a = ab();
        let mut ws = vec![a.word("b").unwrap(), a.word("aa").unwrap(), Word::empty()];
        ws.sort();
        assert_eq!(render_all(&a, &ws), ["", "b", "aa"]);
    }

    #[test]
    fn decode_matches_odometer() {
        let words: Vec<Word> = WordsOfLength::new(3, 4).collect();
        let mut buf = [0; 4];
        for (i, w) in words.iter().enumerate() {
            decode_word(3, i as u64, &mut buf);
            assert_eq!(&buf[..], w.letters());
        }
    }

    #[test]
    fn order_of_declaration_is_letter_order() {
        let a = Alphabet::parse("ba").unwrap();
        assert_eq!(render_all(&a, &enumerate_words(&a, 1)), ["b", "a"]);
    }
}
